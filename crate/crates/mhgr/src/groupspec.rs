//! Group expressions such as `C2^3`, `D10`, `C3xQ8` or `@table.json x C2`.
//!
//! ```text
//! spec   := factor (sep factor)*
//! sep    := 'x' | '*'
//! factor := 'C' n ('^' k)? | 'D' n | 'Q8' | 'A4' | 'X27' | '@' path
//! ```
//!
//! `Dn` is the dihedral group of ORDER `n`: `D6` is the symmetric group on
//! three letters. An `@path` runs to the next whitespace, so a factor that
//! follows it needs a space before the separator.

use std::path::{Path, PathBuf};

use mhgr_core::{Descriptor, Group};

use crate::error::{Error, Result};
use crate::formats;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    Family(Descriptor),
    File(PathBuf),
}

/// A parsed group expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub factors: Vec<Factor>,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn err<T>(&self, expected: &str) -> Result<T> {
        let found = match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        Err(Error::Spec { pos: self.pos, expected: expected.to_string(), found })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some('0'..='9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(what);
        }
        self.src[start..self.pos].parse().or_else(|_| {
            self.pos = start;
            self.err(&format!("{what} that fits in a machine word"))
        })
    }

    fn literal(&mut self, rest: &str, expected: &str) -> Result<()> {
        for c in rest.chars() {
            if !self.eat(c) {
                return self.err(expected);
            }
        }
        Ok(())
    }

    fn factor(&mut self) -> Result<Factor> {
        let start = self.pos;
        match self.peek() {
            Some('C') => {
                self.pos += 1;
                let n = self.number("a group order after 'C'")?;
                if n == 0 {
                    self.pos = start + 1;
                    return self.err("a positive order");
                }
                if self.eat('^') {
                    let k = self.number("an exponent after '^'")?;
                    if k == 0 {
                        return Err(Error::Spec {
                            pos: start,
                            expected: "a positive exponent".into(),
                            found: "0".into(),
                        });
                    }
                    Ok(Factor::Family(power(n, k)))
                } else {
                    Ok(Factor::Family(Descriptor::Cyclic(n)))
                }
            }
            Some('D') => {
                self.pos += 1;
                let n = self.number("a dihedral ORDER after 'D' (even, at least 6)")?;
                if n < 6 || n % 2 == 1 {
                    return Err(Error::Spec {
                        pos: start + 1,
                        expected: "an even dihedral ORDER of at least 6 (D6 has 6 elements)".into(),
                        found: n.to_string(),
                    });
                }
                Ok(Factor::Family(Descriptor::Dihedral(n)))
            }
            Some('Q') => {
                self.pos += 1;
                self.literal("8", "'8' in Q8")?;
                Ok(Factor::Family(Descriptor::Quaternion8))
            }
            Some('A') => {
                self.pos += 1;
                self.literal("4", "'4' in A4")?;
                Ok(Factor::Family(Descriptor::Alternating4))
            }
            Some('X') => {
                self.pos += 1;
                self.literal("27", "'27' in X27")?;
                Ok(Factor::Family(Descriptor::Extraspecial27))
            }
            Some('@') => {
                self.pos += 1;
                let begin = self.pos;
                while matches!(self.peek(), Some(c) if !c.is_whitespace()) {
                    self.pos += self.peek().map_or(1, char::len_utf8);
                }
                if begin == self.pos {
                    return self.err("a file path after '@'");
                }
                Ok(Factor::File(PathBuf::from(&self.src[begin..self.pos])))
            }
            _ => self.err("one of Cn, Cp^k, Dn, Q8, A4, X27 or @file"),
        }
    }
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn power(n: usize, k: usize) -> Descriptor {
    if k == 1 {
        Descriptor::Cyclic(n)
    } else if is_prime(n) {
        Descriptor::ElemAbelian { p: n, k }
    } else {
        Descriptor::Product(vec![Descriptor::Cyclic(n); k])
    }
}

impl GroupSpec {
    pub fn parse(src: &str) -> Result<GroupSpec> {
        let mut lx = Lexer { src, pos: 0 };
        let mut factors = Vec::new();
        lx.skip_ws();
        loop {
            factors.push(lx.factor()?);
            lx.skip_ws();
            if lx.peek().is_none() {
                break;
            }
            if !(lx.eat('x') || lx.eat('*')) {
                return lx.err("'x' between factors or end of input");
            }
            lx.skip_ws();
        }
        Ok(GroupSpec { factors })
    }

    /// The family descriptor when no factor is a file.
    pub fn descriptor(&self) -> Option<Descriptor> {
        let mut parts = Vec::new();
        for f in &self.factors {
            match f {
                Factor::Family(d) => parts.push(d.clone()),
                Factor::File(_) => return None,
            }
        }
        Some(if parts.len() == 1 { parts.pop().unwrap() } else { Descriptor::Product(parts) })
    }

    /// Builds the group; `@file` paths are resolved against `base` when relative.
    pub fn build_in(&self, base: Option<&Path>) -> Result<Group> {
        if let Some(d) = self.descriptor() {
            return Ok(Group::standard_family(&d)?);
        }
        let mut groups = Vec::with_capacity(self.factors.len());
        for f in &self.factors {
            groups.push(match f {
                Factor::Family(d) => Group::standard_family(d)?,
                Factor::File(p) => {
                    let path = match base {
                        Some(b) if p.is_relative() => b.join(p),
                        _ => p.clone(),
                    };
                    formats::load_group_table(&path)?
                }
            });
        }
        if groups.len() == 1 {
            return Ok(groups.pop().unwrap());
        }
        Ok(Group::product(&groups)?)
    }

    pub fn build(&self) -> Result<Group> {
        self.build_in(None)
    }
}

/// Parses and builds in one step.
pub fn parse_group(src: &str) -> Result<Group> {
    GroupSpec::parse(src)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(src: &str) -> Descriptor {
        GroupSpec::parse(src).unwrap().descriptor().unwrap()
    }

    #[test]
    fn families() {
        assert_eq!(family("C6"), Descriptor::Cyclic(6));
        assert_eq!(family("C2^3"), Descriptor::ElemAbelian { p: 2, k: 3 });
        assert_eq!(family("C4^2"), Descriptor::Product(vec![Descriptor::Cyclic(4); 2]));
        assert_eq!(family("D10"), Descriptor::Dihedral(10));
        assert_eq!(family("X27"), Descriptor::Extraspecial27);
        assert_eq!(
            family(" C2^4 x C3 "),
            Descriptor::Product(vec![Descriptor::ElemAbelian { p: 2, k: 4 }, Descriptor::Cyclic(3)])
        );
        assert_eq!(family("C3xX27"), Descriptor::Product(vec![Descriptor::Cyclic(3), Descriptor::Extraspecial27]));
    }

    #[test]
    fn display_round_trips() {
        for src in ["C1", "C2^2", "C2^4xC3", "D6", "Q8xC2", "A4", "X27", "C4xC4"] {
            let d = family(src);
            assert_eq!(family(&d.to_string()), d, "{src}");
        }
    }

    #[test]
    fn dihedral_means_order() {
        assert_eq!(parse_group("D6").unwrap().order(), 6);
        assert_eq!(parse_group("D8").unwrap().order(), 8);
    }

    #[test]
    fn errors_carry_position() {
        let cases = [("C", 1), ("C2 y", 3), ("D5", 1), ("Q9", 1), ("C2x", 3), ("Z3", 0), ("C2^0", 0)];
        for (src, want) in cases {
            match GroupSpec::parse(src) {
                Err(Error::Spec { pos, .. }) => assert_eq!(pos, want, "{src}"),
                other => panic!("{src}: {other:?}"),
            }
        }
        let msg = GroupSpec::parse("D7").unwrap_err().to_string();
        assert!(msg.contains("ORDER"), "{msg}");
    }

    #[test]
    fn file_factor() {
        let spec = GroupSpec::parse("@tables/q.json x C2").unwrap();
        assert_eq!(spec.factors[0], Factor::File(PathBuf::from("tables/q.json")));
        assert!(spec.descriptor().is_none());
    }
}
