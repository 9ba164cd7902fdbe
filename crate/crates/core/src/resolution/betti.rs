use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use serde::{Serialize, Serializer};

use crate::hilbert::IntPoly;

/// Graded Betti numbers `β_{i,j}`: homological index `i`, internal degree `j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), u64>,
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        let v: Vec<(usize, i64, u64)> = self.entries.iter().map(|(&(i, j), &b)| (i, j, b)).collect();
        v.serialize(s)
    }
}

impl BettiTable {
    pub fn from_degrees(degrees: &[Vec<i64>]) -> Self {
        let mut entries = BTreeMap::new();
        for (i, ds) in degrees.iter().enumerate() {
            for &j in ds {
                *entries.entry((i, j)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    pub fn get(&self, i: usize, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of homological steps with a nonzero module.
    pub fn length(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// `max{j - i : β_{i,j} ≠ 0}`; 0 for an empty table.
    pub fn regularity(&self) -> i64 {
        self.entries.keys().map(|&(i, j)| j - i as i64).max().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|(k, _)| k.0 == i).map(|(_, b)| *b).sum()
    }

    /// Twists of the `i`-th free module, each repeated by multiplicity,
    /// in descending order.
    pub fn twists(&self, i: usize) -> Vec<i64> {
        let mut v = Vec::new();
        for (&(k, j), &b) in self.entries.iter().rev() {
            if k == i {
                v.extend(core::iter::repeat(j).take(b as usize));
            }
        }
        v
    }

    /// `Σ (-1)^i β_{i,j} t^j`, the K-polynomial of the resolved module.
    pub fn alternating_numerator(&self) -> IntPoly {
        let top = self.entries.keys().map(|k| k.1).max().unwrap_or(0).max(0) as usize;
        let mut out = alloc::vec![0i64; top + 1];
        for (&(i, j), &b) in &self.entries {
            let s = if i % 2 == 0 { 1 } else { -1 };
            out[j as usize] += s * b as i64;
        }
        out
    }

    /// Text grid with rows `j - i` and columns `i`.
    pub fn render(&self) -> String {
        let mut s = String::new();
        if self.entries.is_empty() {
            return s;
        }
        let cols = self.length() + 1;
        let rmin = self.entries.keys().map(|&(i, j)| j - i as i64).min().unwrap();
        let rmax = self.regularity();
        let cell = |v: String, w: usize| alloc::format!("{:>w$}", v, w = w);
        let width = (0..cols)
            .map(|i| {
                let t = self.total(i).to_string_len();
                t.max(i.to_string_len())
            })
            .collect::<Vec<_>>();
        let label_w = ["total".len(), rmax.to_string_len(), rmin.to_string_len()].into_iter().max().unwrap() + 1;
        let _ = write!(s, "{:>w$}", "", w = label_w);
        for i in 0..cols {
            let _ = write!(s, " {}", cell(alloc::format!("{}", i), width[i]));
        }
        s.push('\n');
        let _ = write!(s, "{:>w$}", "total:", w = label_w);
        for i in 0..cols {
            let _ = write!(s, " {}", cell(alloc::format!("{}", self.total(i)), width[i]));
        }
        s.push('\n');
        for r in rmin..=rmax {
            let _ = write!(s, "{:>w$}", alloc::format!("{}:", r), w = label_w);
            for i in 0..cols {
                let b = self.get(i, r + i as i64);
                let v = if b == 0 { String::from(".") } else { alloc::format!("{}", b) };
                let _ = write!(s, " {}", cell(v, width[i]));
            }
            s.push('\n');
        }
        s
    }
}

trait DigitLen {
    fn to_string_len(&self) -> usize;
}

impl<T: core::fmt::Display> DigitLen for T {
    fn to_string_len(&self) -> usize {
        alloc::format!("{}", self).len()
    }
}
