use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest variable count the brute-force oracle accepts.
pub const MAX_BRUTE_VARS: usize = 25;

/// A positive 1-in-3 formula. Variables are `0..num_vars`; every clause
/// holds three distinct variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SatInstance {
    pub num_vars: usize,
    pub clauses: Vec<[usize; 3]>,
}

impl SatInstance {
    pub fn new(num_vars: usize, clauses: Vec<[usize; 3]>) -> Result<Self> {
        for (i, c) in clauses.iter().enumerate() {
            if let Some(&v) = c.iter().find(|&&v| v >= num_vars) {
                return Err(Error::InvalidInstance(format!(
                    "clause {} uses variable {} but there are {num_vars}",
                    i + 1,
                    v + 1
                )));
            }
            if c[0] == c[1] || c[0] == c[2] || c[1] == c[2] {
                return Err(Error::InvalidInstance(format!(
                    "clause {} repeats a variable",
                    i + 1
                )));
            }
        }
        Ok(SatInstance { num_vars, clauses })
    }

    /// Clauses containing `var`, in order.
    pub fn occurrences(&self, var: usize) -> Vec<usize> {
        (0..self.clauses.len())
            .filter(|&c| self.clauses[c].contains(&var))
            .collect()
    }

    /// Every variable occurs in exactly three clauses.
    pub fn is_exactly_3_bounded(&self) -> bool {
        (0..self.num_vars).all(|v| self.occurrences(v).len() == 3)
    }

    pub fn every_variable_occurs(&self) -> bool {
        (0..self.num_vars).all(|v| self.clauses.iter().any(|c| c.contains(&v)))
    }

    /// Whether `assignment` makes exactly one variable true in every clause.
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars
            && self
                .clauses
                .iter()
                .all(|c| c.iter().filter(|&&v| assignment[v]).count() == 1)
    }

    /// Parses the text format: a header `p 1in3 <vars> <clauses> [b3]`, then
    /// one clause of three 1-based variables per line. Blank lines and
    /// lines starting with `c` or `#` are skipped. The `b3` token asserts
    /// that every variable occurs in exactly three clauses.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize, bool)> = None;
        let mut clauses = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let at = offset;
            offset += line.len();
            let body = line.trim();
            if body.is_empty() || body.starts_with('c') || body.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = body.split_whitespace().collect();
            match header {
                None => {
                    if tokens.len() < 4 || tokens[0] != "p" || tokens[1] != "1in3" {
                        return Err(Error::parse(at, "expected header `p 1in3 <vars> <clauses> [b3]`"));
                    }
                    let vars = number(tokens[2], at)?;
                    let count = number(tokens[3], at)?;
                    let bounded = match tokens.get(4) {
                        None => false,
                        Some(&"b3") if tokens.len() == 5 => true,
                        Some(_) => return Err(Error::parse(at, "unexpected token after the clause count")),
                    };
                    header = Some((vars, count, bounded));
                }
                Some((vars, _, _)) => {
                    if tokens.len() != 3 {
                        return Err(Error::parse(at, "a clause has exactly three variables"));
                    }
                    let mut c = [0; 3];
                    for (slot, tok) in c.iter_mut().zip(&tokens) {
                        let v = number(tok, at)?;
                        if v == 0 || v > vars {
                            return Err(Error::parse(at, format!("variable {v} is outside 1..={vars}")));
                        }
                        *slot = v - 1;
                    }
                    clauses.push(c);
                }
            }
        }
        let (vars, count, bounded) = header.ok_or_else(|| Error::parse(0, "missing header"))?;
        if clauses.len() != count {
            return Err(Error::parse(
                offset,
                format!("header announces {count} clauses, found {}", clauses.len()),
            ));
        }
        let phi = SatInstance::new(vars, clauses)?;
        if bounded && !phi.is_exactly_3_bounded() {
            return Err(Error::InvalidInstance(
                "marked b3 but some variable does not occur exactly three times".into(),
            ));
        }
        Ok(phi)
    }

    /// Every formula on 3 to `max_vars` variables with 1 to `max_clauses`
    /// clauses (as a multiset) in which every variable occurs.
    pub fn all_small(max_vars: usize, max_clauses: usize) -> Vec<SatInstance> {
        let mut out = Vec::new();
        for n in 3..=max_vars {
            let triples: Vec<[usize; 3]> = crate::domination::Combinations::new(n, 3)
                .map(|c| [c[0], c[1], c[2]])
                .collect();
            for m in 1..=max_clauses {
                let mut idx = vec![0; m];
                loop {
                    let phi = SatInstance {
                        num_vars: n,
                        clauses: idx.iter().map(|&i| triples[i]).collect(),
                    };
                    if phi.every_variable_occurs() {
                        out.push(phi);
                    }
                    // next nondecreasing index sequence
                    let Some(p) = (0..m).rev().find(|&p| idx[p] + 1 < triples.len()) else {
                        break;
                    };
                    let next = idx[p] + 1;
                    idx[p..].iter_mut().for_each(|i| *i = next);
                }
            }
        }
        out
    }
}

fn number(tok: &str, at: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(at, format!("`{tok}` is not a non-negative integer")))
}

impl FromStr for SatInstance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SatInstance::parse(s)
    }
}

impl fmt::Display for SatInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b3 = if self.is_exactly_3_bounded() { " b3" } else { "" };
        writeln!(f, "p 1in3 {} {}{b3}", self.num_vars, self.clauses.len())?;
        for c in &self.clauses {
            writeln!(f, "{} {} {}", c[0] + 1, c[1] + 1, c[2] + 1)?;
        }
        Ok(())
    }
}

/// An assignment with exactly one true variable per clause, by trying all
/// `2^n` assignments.
pub fn brute_1in3(phi: &SatInstance) -> Result<Option<Vec<bool>>> {
    if phi.num_vars > MAX_BRUTE_VARS {
        return Err(Error::ScaleLimit(format!(
            "{} variables, brute force stops at {MAX_BRUTE_VARS}",
            phi.num_vars
        )));
    }
    let masks: Vec<u32> = phi
        .clauses
        .iter()
        .map(|c| c.iter().fold(0, |m, &v| m | 1 << v))
        .collect();
    let found = (0u32..1 << phi.num_vars).find(|&a| masks.iter().all(|&m| (a & m).count_ones() == 1));
    Ok(found.map(|a| (0..phi.num_vars).map(|v| a >> v & 1 == 1).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_formulas() {
        let one = SatInstance::new(3, vec![[0, 1, 2]]).unwrap();
        assert_eq!(brute_1in3(&one).unwrap(), Some(vec![true, false, false]));
        let two = SatInstance::new(4, vec![[0, 1, 2], [0, 1, 3]]).unwrap();
        assert!(two.satisfied_by(&brute_1in3(&two).unwrap().unwrap()));
        let triple = SatInstance::new(3, vec![[0, 1, 2]; 3]).unwrap();
        assert!(triple.is_exactly_3_bounded());
        assert!(brute_1in3(&triple).unwrap().is_some());
    }

    #[test]
    fn all_four_triples_is_unsatisfiable() {
        let phi = SatInstance::new(4, vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
        assert_eq!(brute_1in3(&phi).unwrap(), None);
    }

    #[test]
    fn parse_and_print() {
        let phi: SatInstance = "c three copies\np 1in3 3 3 b3\n1 2 3\n1 2 3\n3 2 1\n".parse().unwrap();
        assert_eq!(phi.clauses[2], [2, 1, 0]);
        assert_eq!(phi.to_string().parse::<SatInstance>().unwrap(), phi);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(SatInstance::parse("p cnf 3 1\n1 2 3\n"), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(SatInstance::parse("p 1in3 3 1\n1 2 4\n"), Err(Error::Parse { offset: 11, .. })));
        assert!(matches!(SatInstance::parse("p 1in3 3 1\n1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(SatInstance::parse("p 1in3 3 2\n1 2 3\n"), Err(Error::Parse { .. })));
        assert!(matches!(SatInstance::parse("p 1in3 3 1\n1 1 3\n"), Err(Error::InvalidInstance(_))));
        assert!(matches!(SatInstance::parse("p 1in3 3 1 b3\n1 2 3\n"), Err(Error::InvalidInstance(_))));
    }

    #[test]
    fn oracle_refuses_large_formulas() {
        let phi = SatInstance::new(26, vec![]).unwrap();
        assert!(matches!(brute_1in3(&phi), Err(Error::ScaleLimit(_))));
    }

    #[test]
    fn small_formula_family() {
        let all = SatInstance::all_small(4, 4);
        assert!(all.iter().all(|p| p.every_variable_occurs() && p.clauses.len() <= 4));
        // 3 variables: one triple repeated 1..4 times
        assert_eq!(all.iter().filter(|p| p.num_vars == 3).count(), 4);
        let distinct: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
    }
}
