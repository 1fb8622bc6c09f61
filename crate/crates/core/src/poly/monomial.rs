use smallvec::SmallVec;

/// A `(variable position, exponent)` pair.
type Exponent = (u32, u32);

/// A monomial as a sparse list of `(variable position, exponent)` pairs,
/// sorted by position, with no zero exponents. The empty list is `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: SmallVec<[(u32, u32); 4]>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn variable(position: usize, exponent: u32) -> Self {
        if exponent == 0 {
            return Self::one();
        }
        let mut exps = SmallVec::new();
        exps.push((position as u32, exponent));
        Self { exps, degree: exponent }
    }

    /// Builds a monomial from unsorted pairs; repeated positions are
    /// multiplied together and zero exponents dropped.
    pub fn from_exponents(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut exps: SmallVec<[(u32, u32); 4]> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_unstable_by_key(|&(v, _)| v);
        let mut merged: SmallVec<[(u32, u32); 4]> = SmallVec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        let degree = merged.iter().map(|&(_, e)| e).sum();
        Self { exps: merged, degree }
    }

    pub fn exponents(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, position: usize) -> u32 {
        let p = position as u32;
        self.exps
            .binary_search_by_key(&p, |&(v, _)| v)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    /// Splits into the parts with positions `< split` and `>= split`.
    pub fn split_at_variable(&self, split: usize) -> (&[Exponent], &[Exponent]) {
        let k = self.exps.partition_point(|&(v, _)| (v as usize) < split);
        self.exps.split_at(k)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut exps = SmallVec::with_capacity(self.exps.len() + other.exps.len());
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i].0 == b[j].0 {
                exps.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            } else if a[i].0 < b[j].0 {
                exps.push(a[i]);
                i += 1;
            } else {
                exps.push(b[j]);
                j += 1;
            }
        }
        exps.extend_from_slice(&a[i..]);
        exps.extend_from_slice(&b[j..]);
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect(),
            degree: self.degree * k,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree || self.exps.len() > other.exps.len() {
            return false;
        }
        let b = &other.exps;
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < b.len() && b[j].0 < v {
                j += 1;
            }
            if j == b.len() || b[j].0 != v || b[j].1 < e {
                return false;
            }
            j += 1;
        }
        true
    }

    /// `other / self`, if `self` divides `other`.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = SmallVec::with_capacity(other.exps.len());
        let a = &self.exps;
        let mut i = 0;
        for &(v, e) in &other.exps {
            if i < a.len() && a[i].0 == v {
                if e > a[i].1 {
                    exps.push((v, e - a[i].1));
                }
                i += 1;
            } else {
                exps.push((v, e));
            }
        }
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = SmallVec::with_capacity(self.exps.len() + other.exps.len());
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i].0 == b[j].0 {
                exps.push((a[i].0, a[i].1.max(b[j].1)));
                i += 1;
                j += 1;
            } else if a[i].0 < b[j].0 {
                exps.push(a[i]);
                i += 1;
            } else {
                exps.push(b[j]);
                j += 1;
            }
        }
        exps.extend_from_slice(&a[i..]);
        exps.extend_from_slice(&b[j..]);
        let degree = exps.iter().map(|&(_, e)| e).sum();
        Monomial { exps, degree }
    }

    /// True when no variable occurs in both.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i].0 == b[j].0 {
                return false;
            } else if a[i].0 < b[j].0 {
                i += 1;
            } else {
                j += 1;
            }
        }
        true
    }

    /// Renames positions through `map` (old position -> new position).
    pub(crate) fn remap(&self, map: &[u32]) -> Monomial {
        Monomial::from_exponents(self.exps.iter().map(|&(v, e)| (map[v as usize], e)))
    }

    /// Drops the variable at `position`, returning its exponent.
    pub(crate) fn take_variable(&self, position: usize) -> (u32, Monomial) {
        let e = self.exponent(position);
        if e == 0 {
            return (0, self.clone());
        }
        let exps: SmallVec<_> = self.exps.iter().copied().filter(|&(v, _)| v as usize != position).collect();
        (e, Monomial { exps, degree: self.degree - e })
    }
}
