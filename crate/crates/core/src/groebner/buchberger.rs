use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, Polynomial};

/// Default cap on the number of pending critical pairs.
pub const DEFAULT_MAX_PAIRS: usize = 1_000_000;

/// Fully reduces `f` by `basis`: no monomial of the result is divisible by a
/// leading monomial of `basis`, and `f - result` lies in the ideal spanned by
/// `basis`. Zero entries of `basis` are ignored.
pub fn normal_form<C: Field>(f: &Polynomial<C>, basis: &[Polynomial<C>]) -> Polynomial<C> {
    let ring = f.ring().clone();
    let divisors: Vec<(&Monomial, C, &Polynomial<C>)> = basis
        .iter()
        .filter_map(|g| g.leading_term().map(|t| (&t.monomial, t.coeff.inverse(), g)))
        .collect();
    if divisors.is_empty() {
        return f.clone();
    }
    let mut rest = f.clone();
    let mut remainder = Vec::new();
    while let Some(lead) = rest.leading_term() {
        let hit = divisors.iter().find_map(|(lm, inv, g)| lm.divide_into(&lead.monomial).map(|q| (q, inv, g)));
        match hit {
            Some((q, inv, g)) => {
                let c = lead.coeff.clone() * (*inv).clone();
                rest = rest.sub_mul_term(&c, &q, g);
            }
            None => {
                let mut terms = rest.into_terms();
                remainder.push(terms.remove(0));
                rest = Polynomial::from_sorted_terms(&ring, terms);
            }
        }
    }
    Polynomial::from_sorted_terms(&ring, remainder)
}

/// The S-polynomial of two nonzero polynomials.
pub fn s_polynomial<C: Field>(f: &Polynomial<C>, g: &Polynomial<C>) -> Polynomial<C> {
    let (ft, gt) = (f.leading_term().expect("nonzero"), g.leading_term().expect("nonzero"));
    let lcm = ft.monomial.lcm(&gt.monomial);
    let mf = ft.monomial.divide_into(&lcm).unwrap();
    let mg = gt.monomial.divide_into(&lcm).unwrap();
    f.mul_term(&ft.coeff.inverse(), &mf).sub_mul_term(&gt.coeff.inverse(), &mg, g)
}

struct PairQueue {
    heap: BinaryHeap<Reverse<(u32, usize, usize)>>,
    pending: HashSet<(usize, usize)>,
}

impl PairQueue {
    fn push(&mut self, i: usize, j: usize, lcm_degree: u32) {
        self.heap.push(Reverse((lcm_degree, j, i)));
        self.pending.insert((i, j));
    }

    fn pop(&mut self) -> Option<(usize, usize)> {
        let Reverse((_, j, i)) = self.heap.pop()?;
        self.pending.remove(&(i, j));
        Some((i, j))
    }

    fn contains(&self, a: usize, b: usize) -> bool {
        self.pending.contains(&(a.min(b), a.max(b)))
    }
}

/// Reduced Gröbner basis of the ideal generated by `generators`, under the
/// order of their ring. The result is monic, interreduced and sorted by
/// descending leading monomial, hence unique for the ideal and order.
pub fn buchberger<C: Field>(generators: &[Polynomial<C>], max_pairs: usize) -> Result<Vec<Polynomial<C>>> {
    complete(&[], generators, max_pairs)
}

/// Like [`buchberger`], but `known` is assumed to already be a Gröbner basis,
/// so pairs inside it are skipped.
pub fn complete<C: Field>(
    known: &[Polynomial<C>],
    generators: &[Polynomial<C>],
    max_pairs: usize,
) -> Result<Vec<Polynomial<C>>> {
    let Some(ring) = known.iter().chain(generators).map(|g| g.ring().clone()).next() else {
        return Ok(Vec::new());
    };
    let mut basis: Vec<Polynomial<C>> = Vec::new();
    let mut queue = PairQueue { heap: BinaryHeap::new(), pending: HashSet::new() };

    for g in known.iter().filter(|g| !g.is_zero()) {
        if g.ring() != &ring {
            return Err(Error::RingMismatch);
        }
        basis.push(g.monic());
    }
    let n_known = basis.len();
    for g in generators {
        if g.ring() != &ring {
            return Err(Error::RingMismatch);
        }
        let h = normal_form(g, &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![Polynomial::one(&ring)]);
        }
        basis.push(h.monic());
    }
    for j in 0..basis.len() {
        for i in 0..j {
            if j < n_known {
                continue;
            }
            let lcm = lead(&basis[i]).lcm(lead(&basis[j]));
            queue.push(i, j, lcm.degree());
        }
    }
    check_queue(&queue, max_pairs)?;

    while let Some((i, j)) = queue.pop() {
        let (li, lj) = (lead(&basis[i]), lead(&basis[j]));
        if li.is_coprime(lj) {
            continue;
        }
        let lcm = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i && k != j && !queue.contains(i, k) && !queue.contains(j, k) && lead(&basis[k]).divides(&lcm)
        });
        if chain {
            continue;
        }
        let h = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![Polynomial::one(&ring)]);
        }
        let h = h.monic();
        let new = basis.len();
        for (k, g) in basis.iter().enumerate() {
            queue.push(k, new, lead(g).lcm(lead(&h)).degree());
        }
        basis.push(h);
        check_queue(&queue, max_pairs)?;
    }
    Ok(reduce_basis(basis))
}

fn check_queue(queue: &PairQueue, max_pairs: usize) -> Result<()> {
    if queue.pending.len() > max_pairs {
        return Err(Error::ResourceLimit(format!("Gröbner pair queue exceeded {max_pairs} pairs")));
    }
    Ok(())
}

fn lead<C: Field>(f: &Polynomial<C>) -> &Monomial {
    f.leading_monomial().expect("basis elements are nonzero")
}

/// Turns a Gröbner basis into the reduced one.
pub fn reduce_basis<C: Field>(basis: Vec<Polynomial<C>>) -> Vec<Polynomial<C>> {
    let Some(ring) = basis.first().map(|g| g.ring().clone()) else {
        return basis;
    };
    let mut basis: Vec<Polynomial<C>> = basis.into_iter().filter(|g| !g.is_zero()).collect();
    basis.sort_by(|a, b| ring.compare(lead(a), lead(b)));
    // Minimal basis: drop anything whose leading monomial is divisible by
    // the leading monomial of another (smaller) survivor.
    let mut minimal: Vec<Polynomial<C>> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|m| lead(m).divides(lead(&g))) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial<C>> =
            minimal.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, g)| g.clone()).collect();
        let lt = minimal[i].leading_term().unwrap().clone();
        let tail = Polynomial::from_sorted_terms(&ring, minimal[i].terms()[1..].to_vec());
        let tail = normal_form(&tail, &others);
        let g = Polynomial::monomial(&ring, lt.coeff, lt.monomial) + tail;
        reduced.push(g.monic());
    }
    reduced.sort_by(|a, b| ring.compare(lead(b), lead(a)));
    reduced
}

/// Checks the defining property directly: every S-polynomial reduces to zero.
pub fn is_groebner_basis<C: Field>(basis: &[Polynomial<C>]) -> bool {
    let basis: Vec<&Polynomial<C>> = basis.iter().filter(|g| !g.is_zero()).collect();
    let owned: Vec<Polynomial<C>> = basis.iter().map(|g| (*g).clone()).collect();
    for j in 0..basis.len() {
        for i in 0..j {
            if !normal_form(&s_polynomial(basis[i], basis[j]), &owned).is_zero() {
                return false;
            }
        }
    }
    true
}

/// True when `basis` is reduced: monic, and no term of any element is
/// divisible by the leading monomial of another.
pub fn is_reduced<C: Field>(basis: &[Polynomial<C>]) -> bool {
    basis.iter().enumerate().all(|(i, g)| {
        g.leading_coeff().is_some_and(|c| c.is_one())
            && basis.iter().enumerate().all(|(k, h)| {
                k == i || g.terms().iter().all(|t| !lead(h).divides(&t.monomial))
            })
    })
}

pub(crate) fn is_unit_basis<C: Field>(basis: &[Polynomial<C>]) -> bool {
    basis.len() == 1 && basis[0].is_constant() && !basis[0].constant_term().is_zero()
}
