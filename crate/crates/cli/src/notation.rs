//! The `H^k(a_1,..,a_n,-b_1,..,-b_p)` notation.
//!
//! ```text
//! stratum := "H^" k "(" entry ("," entry)* ")"
//! entry   := integer | integer "^" count
//! ```
//!
//! Whitespace is ignored and U+2212 is read as a minus sign. A negative
//! entry `v` with `|v| >= k` is a pole of order `|v|`; every other entry is
//! a conical singularity.

use strata_core::Stratum;

use crate::error::CliError;

/// Characters of the input with whitespace dropped, each tagged with its
/// character offset in the original text.
struct Cursor {
    chars: Vec<(usize, char)>,
    at: usize,
    len: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        let chars: Vec<(usize, char)> = text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i, if c == '\u{2212}' { '-' } else { c }))
            .collect();
        Cursor {
            chars,
            at: 0,
            len: text.chars().count(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn position(&self) -> usize {
        self.chars.get(self.at).map_or(self.len, |&(i, _)| i)
    }

    fn error(&self, message: impl Into<String>) -> CliError {
        CliError::Parse {
            position: self.position(),
            message: message.into(),
        }
    }

    fn expect(&mut self, want: char) -> Result<(), CliError> {
        match self.peek() {
            Some(c) if c == want => {
                self.at += 1;
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(format!("expected '{want}', found end of input"))),
        }
    }

    fn integer(&mut self, signed: bool) -> Result<i64, CliError> {
        let start = self.position();
        let negative = signed && self.peek() == Some('-');
        if negative {
            self.at += 1;
        }
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.at += 1;
        }
        if digits.is_empty() {
            return Err(self.error("expected an integer"));
        }
        let value: i64 = digits.parse().map_err(|_| CliError::Parse {
            position: start,
            message: "integer out of range".into(),
        })?;
        Ok(if negative { -value } else { value })
    }
}

pub fn parse_stratum(text: &str) -> Result<Stratum, CliError> {
    let mut cur = Cursor::new(text);
    cur.expect('H')?;
    cur.expect('^')?;
    let k_at = cur.position();
    let k = cur.integer(false)?;
    if k == 0 || k > i64::from(u32::MAX) {
        return Err(CliError::Parse {
            position: k_at,
            message: "k must be a positive integer".into(),
        });
    }
    cur.expect('(')?;
    if cur.peek() == Some(')') {
        return Err(cur.error("empty singularity pattern"));
    }
    let mut zeros = Vec::new();
    let mut poles = Vec::new();
    loop {
        let value = cur.integer(true)?;
        let mut count = 1;
        if cur.peek() == Some('^') {
            cur.at += 1;
            let count_at = cur.position();
            count = cur.integer(false)?;
            if count == 0 || count > 1 << 16 {
                return Err(CliError::Parse {
                    position: count_at,
                    message: "multiplicity must be between 1 and 65536".into(),
                });
            }
        }
        for _ in 0..count {
            if value < 0 && -value >= k {
                poles.push(-value);
            } else {
                zeros.push(value);
            }
        }
        match cur.peek() {
            Some(',') => cur.at += 1,
            Some(')') => {
                cur.at += 1;
                break;
            }
            Some(c) => return Err(cur.error(format!("expected ',' or ')', found '{c}'"))),
            None => return Err(cur.error("unclosed '('")),
        }
    }
    if cur.peek().is_some() {
        return Err(cur.error("trailing input after ')'"));
    }
    Ok(Stratum::new(k as u32, zeros, poles)?)
}

pub fn render(stratum: &Stratum) -> String {
    stratum.to_string()
}
