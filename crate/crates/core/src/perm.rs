//! Permutations of `{0..n-1}`, with block sums and cycle notation for the
//! command line.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `{0..n-1}` stored as its mapping vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n).collect(),
        }
    }

    pub fn from_map(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &i in &map {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "mapping {map:?} is not a bijection on 0..{n}"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { map })
    }

    /// The transposition (i j) on `n` points.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i >= n || j >= n {
            return Err(Error::InvalidPermutation(format!(
                "transposition ({i} {j}) out of range for {n} points"
            )));
        }
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(i, j);
        Ok(Permutation { map })
    }

    /// Parses disjoint-cycle notation such as `(0 1)(2 3)` over `n` points.
    /// Whitespace or commas separate the points of a cycle; fixed points may
    /// be omitted. The empty string is the identity.
    pub fn from_cycles(n: usize, s: &str) -> Result<Self> {
        let mut map: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        let s = s.trim();
        if s.is_empty() || s == "id" {
            return Ok(Permutation { map });
        }
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::InvalidPermutation(format!("expected '(' in {s:?}")))?;
            if !rest[..open].trim().is_empty() {
                return Err(Error::InvalidPermutation(format!(
                    "unexpected text {:?} between cycles",
                    &rest[..open]
                )));
            }
            let close = rest[open..]
                .find(')')
                .map(|i| open + i)
                .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in {s:?}")))?;
            let body = &rest[open + 1..close];
            let points: Vec<usize> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>().map_err(|_| {
                        Error::InvalidPermutation(format!("bad point {t:?} in cycle"))
                    })
                })
                .collect::<Result<_>>()?;
            for &p in &points {
                if p >= n {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} out of range for {n} points"
                    )));
                }
                if moved[p] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} appears in two cycles"
                    )));
                }
                moved[p] = true;
            }
            for w in 0..points.len() {
                map[points[w]] = points[(w + 1) % points.len()];
            }
            rest = rest[close + 1..].trim_start();
        }
        Ok(Permutation { map })
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Composition as functions: `(self.compose(other)).apply(i)` is
    /// `self.apply(other.apply(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::InvalidPermutation(format!(
                "cannot compose permutations on {} and {} points",
                self.len(),
                other.len()
            )));
        }
        Ok(Permutation {
            map: other.map.iter().map(|&i| self.map[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { map: inv }
    }

    /// Block sum: acts as `self` on the first block and as `other`, shifted,
    /// on the second.
    pub fn block_sum(&self, other: &Permutation) -> Permutation {
        let m = self.len();
        let mut map = self.map.clone();
        map.extend(other.map.iter().map(|&i| i + m));
        Permutation { map }
    }

    /// The block swap on m + n points: the first m points move up by n, the
    /// last n points move down by m.
    pub fn block_swap(m: usize, n: usize) -> Permutation {
        let map = (0..m + n)
            .map(|i| if i < m { i + n } else { i - m })
            .collect();
        Permutation { map }
    }

    /// All n! permutations on n points, in lexicographic order of mapping.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation {
                map: current.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        out
    }

    /// Cycle notation, omitting fixed points; the identity prints as `id`.
    pub fn to_cycles(&self) -> String {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.map[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.map[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.map[cur];
            }
            out.push('(');
            out.push_str(
                &cycle
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("id");
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycles())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_round_trip() {
        let p = Permutation::from_cycles(4, "(0 1)(2 3)").unwrap();
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(3), 2);
        assert_eq!(p.to_cycles(), "(0 1)(2 3)");
        let q = Permutation::from_cycles(5, "(0 1 2)").unwrap();
        assert_eq!(q.apply(2), 0);
        assert_eq!(q.apply(4), 4);
        assert!(Permutation::from_cycles(2, "(0 3)").is_err());
        assert!(Permutation::from_cycles(3, "(0 1)(1 2)").is_err());
        assert!(Permutation::from_cycles(3, "").unwrap().is_identity());
    }

    #[test]
    fn compose_and_invert() {
        let p = Permutation::from_cycles(3, "(0 1 2)").unwrap();
        let q = Permutation::from_cycles(3, "(0 1)").unwrap();
        // (p . q)(i) = p(q(i))
        let pq = p.compose(&q).unwrap();
        assert_eq!(pq.apply(0), p.apply(q.apply(0)));
        let id = p.compose(&p.inverse()).unwrap();
        assert!(id.is_identity());
    }

    #[test]
    fn blocks() {
        let p = Permutation::from_cycles(2, "(0 1)").unwrap();
        let q = Permutation::identity(2);
        let s = p.block_sum(&q);
        assert_eq!(s.apply(0), 1);
        assert_eq!(s.apply(2), 2);
        let swap = Permutation::block_swap(2, 3);
        assert_eq!(swap.apply(0), 3);
        assert_eq!(swap.apply(4), 2);
    }

    #[test]
    fn enumerate_small_groups() {
        assert_eq!(Permutation::all(0).len(), 1);
        assert_eq!(Permutation::all(3).len(), 6);
        assert_eq!(Permutation::all(4).len(), 24);
    }
}
