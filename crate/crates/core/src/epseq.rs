//! Eventually periodic points of `A^ω` in canonical (prefix, period) form.
//!
//! A value `prefix · period · period · …` is canonical when the period is
//! primitive (not a proper power of a shorter word) and the prefix is
//! minimal (empty, or its last entry differs from the period's last entry).
//! Two `EpSeq` values denote the same point of `A^ω` iff their canonical
//! forms are identical, so derived equality is semantic equality.

use std::cmp::Ordering;
use std::fmt;

use crate::order::{compare, Element, OrderDescriptor};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpSeq {
    base: OrderDescriptor,
    prefix: Vec<Element>,
    period: Vec<Element>,
}

/// Witness that `σ^k u = σ^l v`; for `tail_equiv_n` with modulus `n`,
/// `k ≡ l (mod n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivWitness {
    pub k: usize,
    pub l: usize,
}

impl EpSeq {
    /// Canonicalize a raw (prefix, period) pair: replace the period by its
    /// primitive root, then while the last prefix entry equals the last
    /// period entry, absorb it by rotating the period right.
    pub fn new(
        base: OrderDescriptor,
        prefix: Vec<Element>,
        period: Vec<Element>,
    ) -> Result<EpSeq> {
        if period.is_empty() {
            return Err(Error::InvalidElement("period must be nonempty".into()));
        }
        for e in prefix.iter().chain(period.iter()) {
            e.validate(&base)?;
        }
        Ok(EpSeq::canonical_unchecked(base, prefix, period))
    }

    fn canonical_unchecked(
        base: OrderDescriptor,
        mut prefix: Vec<Element>,
        mut period: Vec<Element>,
    ) -> EpSeq {
        let root = primitive_root_len(&period);
        period.truncate(root);
        while let Some(last) = prefix.last() {
            if last == period.last().expect("period nonempty") {
                prefix.pop();
                let moved = period.pop().expect("period nonempty");
                period.insert(0, moved);
            } else {
                break;
            }
        }
        EpSeq { base, prefix, period }
    }

    /// The periodic point `w̄` (empty prefix).
    pub fn periodic(base: OrderDescriptor, word: Vec<Element>) -> Result<EpSeq> {
        EpSeq::new(base, Vec::new(), word)
    }

    /// The constant point `ā`.
    pub fn constant(base: OrderDescriptor, a: Element) -> Result<EpSeq> {
        EpSeq::new(base, Vec::new(), vec![a])
    }

    pub fn base(&self) -> &OrderDescriptor {
        &self.base
    }

    pub fn prefix(&self) -> &[Element] {
        &self.prefix
    }

    pub fn period(&self) -> &[Element] {
        &self.period
    }

    /// The `i`-th entry of the denoted sequence.
    pub fn entry(&self, i: usize) -> &Element {
        if i < self.prefix.len() {
            &self.prefix[i]
        } else {
            &self.period[(i - self.prefix.len()) % self.period.len()]
        }
    }

    /// First `k` entries.
    pub fn take(&self, k: usize) -> Vec<Element> {
        (0..k).map(|i| self.entry(i).clone()).collect()
    }

    /// Shortest period length of the denoted sequence.
    pub fn eventual_period(&self) -> usize {
        self.period.len()
    }

    /// Canonical form of `σ^k` applied to the sequence.
    pub fn shift(&self, k: usize) -> EpSeq {
        if k <= self.prefix.len() {
            EpSeq::canonical_unchecked(
                self.base.clone(),
                self.prefix[k..].to_vec(),
                self.period.clone(),
            )
        } else {
            let r = (k - self.prefix.len()) % self.period.len();
            let mut period = self.period[r..].to_vec();
            period.extend_from_slice(&self.period[..r]);
            // empty prefix + rotation of a primitive word is canonical
            EpSeq {
                base: self.base.clone(),
                prefix: Vec::new(),
                period,
            }
        }
    }

    /// Canonical form of `t · u`.
    pub fn prepend(&self, t: &[Element]) -> Result<EpSeq> {
        for e in t {
            e.validate(&self.base)?;
        }
        let mut prefix = t.to_vec();
        prefix.extend_from_slice(&self.prefix);
        Ok(EpSeq::canonical_unchecked(
            self.base.clone(),
            prefix,
            self.period.clone(),
        ))
    }

    /// Lexicographic comparison. The scan depth
    /// `max(|prefix_u|, |prefix_v|) + lcm(|period_u|, |period_v|)` is
    /// complete: beyond both prefixes the entries cycle with period lcm.
    pub fn compare(&self, other: &EpSeq) -> Result<Ordering> {
        if self.base != other.base {
            return Err(Error::BaseMismatch(format!(
                "{} vs {}",
                self.base, other.base
            )));
        }
        let depth = self.prefix.len().max(other.prefix.len())
            + lcm(self.period.len(), other.period.len());
        for i in 0..depth {
            let c = compare(&self.base, self.entry(i), other.entry(i))?;
            if c != Ordering::Equal {
                return Ok(c);
            }
        }
        Ok(Ordering::Equal)
    }

    /// Decide `u ~ₙ v` and return a shift witness `(k, l)` with
    /// `k ≡ l (mod n)` when one exists.
    ///
    /// The search bounds `k < |prefix_u| + n·|period_u|` and
    /// `l < |prefix_v| + n·|period_v|` are complete: once the prefix is
    /// consumed, the pair (tail value, shift residue mod n) cycles with
    /// period dividing `n·|period|`.
    pub fn tail_equiv_n(&self, other: &EpSeq, n: usize) -> Result<Option<EquivWitness>> {
        if self.base != other.base {
            return Err(Error::BaseMismatch(format!(
                "{} vs {}",
                self.base, other.base
            )));
        }
        if n == 0 {
            return Err(Error::InvalidElement("modulus must be >= 1".into()));
        }
        if self == other {
            return Ok(Some(EquivWitness { k: 0, l: 0 }));
        }
        // Fast path (single-letter prepends): u ~₂ au iff the eventual
        // period of u is odd, with the explicit witness from the periodic
        // representation.
        if n == 2 {
            if let Some(w) = self.odd_period_witness(other) {
                return Ok(w);
            }
        }
        let bound_u = self.prefix.len() + n * self.period.len();
        let bound_v = other.prefix.len() + n * other.period.len();
        for k in 0..bound_u {
            let su = self.shift(k);
            let mut l = k % n;
            while l < bound_v {
                if su == other.shift(l) {
                    return Ok(Some(EquivWitness { k, l }));
                }
                l += n;
            }
        }
        Ok(None)
    }

    /// Plain tail-equivalence `u ~ v`.
    pub fn tail_equiv(&self, other: &EpSeq) -> Result<Option<EquivWitness>> {
        self.tail_equiv_n(other, 1)
    }

    /// `Some(answer)` when `self` and `other` differ by one prepended
    /// letter, `None` when the fast path does not apply.
    fn odd_period_witness(&self, other: &EpSeq) -> Option<Option<EquivWitness>> {
        if &other.shift(1) == self {
            // other = a·self
            return Some(if self.period.len() % 2 == 1 {
                Some(EquivWitness {
                    k: self.prefix.len(),
                    l: self.prefix.len() + self.period.len() + 1,
                })
            } else {
                None
            });
        }
        if &self.shift(1) == other {
            // self = a·other
            return Some(if other.period.len() % 2 == 1 {
                Some(EquivWitness {
                    k: other.prefix.len() + other.period.len() + 1,
                    l: other.prefix.len(),
                })
            } else {
                None
            });
        }
        None
    }
}

impl fmt::Display for EpSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.prefix.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "|")?;
        for (i, e) in self.period.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Length of the primitive root: the smallest divisor length `d` of `|w|`
/// such that `w` is `w[..d]` repeated.
fn primitive_root_len(w: &[Element]) -> usize {
    let len = w.len();
    'outer: for d in 1..=len {
        if len % d != 0 {
            continue;
        }
        for i in d..len {
            if w[i] != w[i - d] {
                continue 'outer;
            }
        }
        return d;
    }
    len
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin2() -> OrderDescriptor {
        OrderDescriptor::Finite(2)
    }

    fn fin3() -> OrderDescriptor {
        OrderDescriptor::Finite(3)
    }

    fn seq(prefix: &[i64], period: &[i64]) -> EpSeq {
        EpSeq::new(
            fin2(),
            prefix.iter().map(|v| Element::Int(*v)).collect(),
            period.iter().map(|v| Element::Int(*v)).collect(),
        )
        .unwrap()
    }

    fn seq3(prefix: &[i64], period: &[i64]) -> EpSeq {
        EpSeq::new(
            fin3(),
            prefix.iter().map(|v| Element::Int(*v)).collect(),
            period.iter().map(|v| Element::Int(*v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn canonicalization_examples() {
        // ("0","10") denotes 0,1,0,1,… = ("","01")
        assert_eq!(seq(&[0], &[1, 0]), seq(&[], &[0, 1]));
        // periods are primitivized
        assert_eq!(seq(&[], &[0, 1, 0, 1]), seq(&[], &[0, 1]));
        // already canonical
        let s = seq(&[], &[0]);
        assert_eq!(s.prefix().len(), 0);
        assert_eq!(s.period().len(), 1);
    }

    #[test]
    fn canonicalization_preserves_entries() {
        let raw = seq(&[0, 1, 0], &[1, 0, 1, 0]);
        let direct = |i: usize| {
            let p = [0i64, 1, 0];
            let q = [1i64, 0, 1, 0];
            if i < p.len() {
                p[i]
            } else {
                q[(i - p.len()) % q.len()]
            }
        };
        for i in 0..64 {
            assert_eq!(raw.entry(i), &Element::Int(direct(i)));
        }
    }

    #[test]
    fn entry_examples() {
        let u = seq(&[0], &[1, 0]);
        assert_eq!(u.entry(0), &Element::Int(0));
        assert_eq!(u.entry(3), &Element::Int(1));
        let v = seq(&[], &[0, 1, 1]);
        assert_eq!(v.entry(5), &Element::Int(1));
    }

    #[test]
    fn compare_examples() {
        let zerobar = seq(&[], &[0]);
        let zero_ones = seq(&[0], &[1]);
        assert_eq!(zerobar.compare(&zero_ones).unwrap(), Ordering::Less);

        let u = seq(&[], &[0, 1]);
        assert_eq!(u.compare(&zero_ones).unwrap(), Ordering::Less);

        // equal after canonicalization
        let a = seq(&[0], &[1, 0]);
        let b = seq(&[], &[0, 1]);
        assert_eq!(a.compare(&b).unwrap(), Ordering::Equal);
        assert_eq!(a, b);
    }

    #[test]
    fn shift_examples() {
        assert_eq!(seq(&[0], &[1, 0]).shift(1), seq(&[], &[1, 0]));
        assert_eq!(seq(&[], &[0, 1]).shift(2), seq(&[], &[0, 1]));
        assert_eq!(seq(&[0, 0], &[1]).shift(3), seq(&[], &[1]));
    }

    #[test]
    fn prepend_examples() {
        assert_eq!(
            seq(&[], &[0]).prepend(&[Element::Int(1)]).unwrap(),
            seq(&[1], &[0])
        );
        assert_eq!(
            seq(&[], &[0, 1]).prepend(&[Element::Int(0)]).unwrap(),
            seq(&[0], &[0, 1])
        );
        assert_eq!(
            seq(&[], &[0, 1])
                .prepend(&[Element::Int(0), Element::Int(1)])
                .unwrap(),
            seq(&[], &[0, 1])
        );
    }

    #[test]
    fn eventual_period_examples() {
        assert_eq!(seq(&[], &[0, 1, 0, 1]).eventual_period(), 2);
        assert_eq!(seq(&[1], &[0]).eventual_period(), 1);
        assert_eq!(seq3(&[], &[0, 1, 1]).eventual_period(), 3);
    }

    #[test]
    fn tail_equiv_witness_examples() {
        let u = seq(&[], &[0, 1]);
        let v = seq(&[], &[1, 0]);
        assert_eq!(
            u.tail_equiv(&v).unwrap(),
            Some(EquivWitness { k: 0, l: 1 })
        );
        assert_eq!(u.tail_equiv_n(&v, 2).unwrap(), None);

        let w = seq(&[], &[0, 1, 1]);
        let aw = w.prepend(&[Element::Int(0)]).unwrap();
        assert_eq!(
            w.tail_equiv_n(&aw, 2).unwrap(),
            Some(EquivWitness { k: 0, l: 4 })
        );
    }

    #[test]
    fn tail_equiv_witnesses_are_valid() {
        let samples = [
            (seq(&[], &[0, 1]), seq(&[1, 1], &[1, 0])),
            (seq(&[0, 0, 1], &[0, 1, 1]), seq(&[], &[1, 0, 1])),
            (seq(&[], &[0]), seq(&[1, 0, 1], &[0])),
        ];
        for (u, v) in samples {
            for n in 1..=4 {
                if let Some(w) = u.tail_equiv_n(&v, n).unwrap() {
                    assert_eq!(w.k % n, w.l % n);
                    let su = u.shift(w.k);
                    let sv = v.shift(w.l);
                    for i in 0..64 {
                        assert_eq!(su.entry(i), sv.entry(i));
                    }
                }
            }
        }
    }

    #[test]
    fn base_mismatch_is_rejected() {
        let u = seq(&[], &[0]);
        let v = seq3(&[], &[0]);
        assert!(matches!(u.tail_equiv(&v), Err(Error::BaseMismatch(_))));
        assert!(matches!(u.compare(&v), Err(Error::BaseMismatch(_))));
    }

    #[test]
    fn display_form() {
        assert_eq!(seq(&[0], &[1, 0]).to_string(), "|0,1");
        assert_eq!(seq(&[1], &[0]).to_string(), "1|0");
    }
}
