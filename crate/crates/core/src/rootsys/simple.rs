use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A simple Lie algebra type in canonical form (`A1`, `B2`, `C3`, `D4`, `E6`, ...).
///
/// Low-rank coincidences (`B1 = A1`, `C2 = B2`, `D3 = A3`, ...) are rejected
/// so that every simple algebra has exactly one name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    series: Series,
    rank: usize,
}

impl SimpleType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 2,
            Series::C => rank >= 3,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { series, rank })
        } else {
            Err(Error::InvalidGroup {
                position: 0,
                message: format!("{series}{rank} is not a canonical simple type"),
            })
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every canonical simple type of rank at most `max_rank`.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<SimpleType> {
        let series = [
            Series::A,
            Series::B,
            Series::C,
            Series::D,
            Series::E,
            Series::F,
            Series::G,
        ];
        let mut out = Vec::new();
        for s in series {
            for r in 1..=max_rank {
                if let Ok(t) = SimpleType::new(s, r) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Gram matrix of the simple roots in a fixed integral realisation.
    ///
    /// Only ratios matter: the Cartan matrix is `2 G_ij / G_ii`.
    pub(crate) fn gram(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        match self.series {
            Series::E => {
                // Bourbaki labelling: chain 1-3-4-5-6-7-8 with 2 attached to 4
                let mut edges = vec![(1, 3), (3, 4), (4, 5), (2, 4)];
                for k in 5..n {
                    edges.push((k, k + 1));
                }
                let mut g = vec![vec![0; n]; n];
                for (i, row) in g.iter_mut().enumerate() {
                    row[i] = 2;
                }
                for (a, b) in edges {
                    g[a - 1][b - 1] = -1;
                    g[b - 1][a - 1] = -1;
                }
                g
            }
            _ => gram_of(&self.realisation()),
        }
    }

    fn realisation(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let unit_diff = |dim: usize, i: usize| {
            let mut v = vec![0; dim];
            v[i] = 1;
            v[i + 1] = -1;
            v
        };
        match self.series {
            Series::A => (0..n).map(|i| unit_diff(n + 1, i)).collect(),
            Series::B | Series::C | Series::D => {
                let mut vs: Vec<Vec<i64>> = (0..n - 1).map(|i| unit_diff(n, i)).collect();
                let mut last = vec![0; n];
                match self.series {
                    Series::B => last[n - 1] = 1,
                    Series::C => last[n - 1] = 2,
                    _ => {
                        last[n - 2] = 1;
                        last[n - 1] = 1;
                    }
                }
                vs.push(last);
                vs
            }
            // doubled coordinates keep the short roots integral
            Series::F => vec![
                vec![0, 2, -2, 0],
                vec![0, 0, 2, -2],
                vec![0, 0, 0, 2],
                vec![1, -1, -1, -1],
            ],
            Series::G => vec![vec![1, -1, 0], vec![-2, 1, 1]],
            Series::E => unreachable!("E series is built from its Dynkin diagram"),
        }
    }
}

fn gram_of(vs: &[Vec<i64>]) -> Vec<Vec<i64>> {
    vs.iter()
        .map(|a| vs.iter().map(|b| crate::linalg::dot_int(a, b)).collect())
        .collect()
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_token(s.trim(), 0)
    }
}

fn parse_token(tok: &str, position: usize) -> Result<SimpleType> {
    let err = |message: String| Error::InvalidGroup { position, message };
    let mut chars = tok.chars();
    let first = chars.next().ok_or_else(|| err("empty component".into()))?;
    let series =
        Series::from_char(first).ok_or_else(|| err(format!("unknown series '{first}'")))?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(err(format!("expected a rank after '{first}' in '{tok}'")));
    }
    let rank: usize = digits
        .parse()
        .map_err(|_| err(format!("rank out of range in '{tok}'")))?;
    SimpleType::new(series, rank)
        .map_err(|_| err(format!("{series}{rank} is not a canonical simple type")))
}

/// Parses a comma-separated group specification such as `"A2, g2,E8"`.
///
/// Error positions are byte offsets of the offending token.
pub fn parse_group(spec: &str) -> Result<Vec<SimpleType>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for raw in spec.split(',') {
        let lead = raw.len() - raw.trim_start().len();
        out.push(parse_token(raw.trim(), offset + lead)?);
        offset += raw.len() + 1;
    }
    Ok(out)
}

pub fn format_group(components: &[SimpleType]) -> String {
    components
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rank_rules() {
        assert!(SimpleType::new(Series::A, 1).is_ok());
        assert!(SimpleType::new(Series::B, 1).is_err());
        assert!(SimpleType::new(Series::C, 2).is_err());
        assert!(SimpleType::new(Series::D, 3).is_err());
        assert!(SimpleType::new(Series::E, 5).is_err());
        assert!(SimpleType::new(Series::E, 9).is_err());
        assert!(SimpleType::new(Series::F, 4).is_ok());
        assert!(SimpleType::new(Series::G, 3).is_err());
        assert!(SimpleType::new(Series::A, 0).is_err());
    }

    #[test]
    fn parses_case_insensitive_lists() {
        let g = parse_group("a1, B3,e8").unwrap();
        assert_eq!(format_group(&g), "A1,B3,E8");
    }

    #[test]
    fn reports_error_position() {
        match parse_group("A2, D3") {
            Err(Error::InvalidGroup { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        match parse_group("A2,,G2") {
            Err(Error::InvalidGroup { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_group("").is_err());
        assert!(parse_group("X4").is_err());
        assert!(parse_group("A").is_err());
        assert!(parse_group("A1x").is_err());
    }

    #[test]
    fn enumerates_all_types() {
        let all = SimpleType::all_up_to_rank(8);
        // A1..8, B2..8, C3..8, D4..8, E6..8, F4, G2
        assert_eq!(all.len(), 8 + 7 + 6 + 5 + 3 + 1 + 1);
    }
}
