use num::{BigInt, BigRational};

use crate::order::descriptor::{Card, OrderDescriptor};
use crate::order::element::{Element, Letter, Side, SqTuple};
use crate::{Error, Result};

/// Deterministic surjection from the naturals onto the points of `d`.
///
/// Schemes, fixed once and for all:
/// * `fin(n)`: `k mod n`; `omega`: identity; `omegastar`: `-k`;
///   `zeta`: `0, 1, -1, 2, -2, …`.
/// * `eta`: index 0 is 0, odd index `2j-1` is the `j`-th Calkin–Wilf
///   positive rational, even index `2j` is its negative.
/// * `dyadic`: words in length-then-lex order (`e, L, R, LL, LR, …`).
/// * `lex`: Cantor unpairing, first coordinate from the first component
///   (finite factors wrap); `sum`: even/odd side alternation.
/// * `shuffle`: Cantor unpairing into (base index, fiber index), skipping
///   base points whose part is empty.
/// * `sqlimit`: Cantor unpairing into (stage, tuple index), stage taken
///   mod 13 to keep decoded tuples of tractable size; the tuple index is
///   decoded positionwise over the base.
pub fn enumerate(d: &OrderDescriptor, k: u64) -> Result<Element> {
    if d.is_empty_order() {
        return Err(Error::EmptyOrder(format!("cannot enumerate {d}")));
    }
    Ok(match d {
        OrderDescriptor::Empty => unreachable!(),
        OrderDescriptor::Finite(n) => Element::Int((k % *n) as i64),
        OrderDescriptor::Omega => Element::Int(k as i64),
        OrderDescriptor::OmegaStar => Element::Int(-(k as i64)),
        OrderDescriptor::Zeta => Element::Int(zigzag(k)),
        OrderDescriptor::Eta => Element::Rat(enumerate_rational(k)),
        OrderDescriptor::Dyadic => Element::Word(word_at(k)),
        OrderDescriptor::Sum(l, r) => {
            if l.is_empty_order() {
                Element::tag(Side::Right, enumerate(r, k)?)
            } else if r.is_empty_order() {
                Element::tag(Side::Left, enumerate(l, k)?)
            } else if k % 2 == 0 {
                Element::tag(Side::Left, enumerate(l, k / 2)?)
            } else {
                Element::tag(Side::Right, enumerate(r, k / 2)?)
            }
        }
        OrderDescriptor::Lex(fs) => enumerate_lex(fs, k)?,
        OrderDescriptor::Rev(i) => enumerate(i, k)?,
        OrderDescriptor::Shuffle(parts) => enumerate_shuffle(parts, k)?,
        OrderDescriptor::SqLimit(b, n) => enumerate_sqlimit(b, *n as usize, k)?,
    })
}

/// `0, 1, -1, 2, -2, …`
fn zigzag(k: u64) -> i64 {
    if k == 0 {
        0
    } else if k % 2 == 1 {
        ((k + 1) / 2) as i64
    } else {
        -((k / 2) as i64)
    }
}

/// The `j`-th entry of the Calkin–Wilf sequence, 1-indexed:
/// `1, 1/2, 2, 1/3, 3/2, 2/3, 3, …`. Computed by walking the tree along the
/// binary expansion of `j` below its leading bit (0 = left child `p/(p+q)`,
/// 1 = right child `(p+q)/q`).
pub fn calkin_wilf(j: u64) -> BigRational {
    assert!(j >= 1);
    let mut p = BigInt::from(1);
    let mut q = BigInt::from(1);
    let bits = 64 - j.leading_zeros();
    for i in (0..bits.saturating_sub(1)).rev() {
        if (j >> i) & 1 == 0 {
            q += &p;
        } else {
            p += &q;
        }
    }
    BigRational::new(p, q)
}

fn enumerate_rational(k: u64) -> BigRational {
    if k == 0 {
        BigRational::from(BigInt::from(0))
    } else if k % 2 == 1 {
        calkin_wilf((k + 1) / 2)
    } else {
        -calkin_wilf(k / 2)
    }
}

/// Word at index `k` in length-then-lex order: write `k+1` in binary and
/// drop the leading 1; remaining bits map 0 to L and 1 to R.
pub fn word_at(k: u64) -> Vec<Letter> {
    let v = k + 1;
    let bits = 64 - v.leading_zeros();
    let mut out = Vec::with_capacity(bits as usize - 1);
    for i in (0..bits - 1).rev() {
        out.push(if (v >> i) & 1 == 0 { Letter::L } else { Letter::R });
    }
    out
}

/// Cantor unpairing: inverse of `pair(i, j) = (i+j)(i+j+1)/2 + j`.
pub fn unpair(z: u64) -> (u64, u64) {
    // integer sqrt of 8z+1 via floating point plus correction
    let w = {
        let approx = ((8.0 * z as f64 + 1.0).sqrt() as u64).saturating_sub(2);
        let mut w = approx;
        while (w + 1) * (w + 2) / 2 <= z {
            w += 1;
        }
        w
    };
    let t = w * (w + 1) / 2;
    let j = z - t;
    let i = w - j;
    (i, j)
}

pub fn pair(i: u64, j: u64) -> u64 {
    (i + j) * (i + j + 1) / 2 + j
}

fn enumerate_lex(fs: &[OrderDescriptor], k: u64) -> Result<Element> {
    if fs.len() == 1 {
        return enumerate(&fs[0], k);
    }
    let (i, j) = unpair(k);
    let head = enumerate(&fs[0], i)?;
    let tail = enumerate_lex(&fs[1..], j)?;
    Ok(Element::pair(head, tail))
}

fn enumerate_shuffle(parts: &[OrderDescriptor], k: u64) -> Result<Element> {
    let want = k;
    let mut seen = 0u64;
    let mut z = 0u64;
    loop {
        let (bi, fi) = unpair(z);
        let base = word_at(bi);
        let color = base.len() % parts.len();
        if !parts[color].is_empty_order() {
            if seen == want {
                let fiber = enumerate(&parts[color], fi)?;
                return Ok(Element::rep(Element::Word(base), fiber));
            }
            seen += 1;
        }
        z += 1;
    }
}

/// Stages are taken mod 13: a stage-`s` tuple materializes `n^s` leaves, and
/// the u64 index space cannot reach deep stages under any coding anyway.
const SQL_STAGE_LIMIT: u64 = 13;

fn enumerate_sqlimit(base: &OrderDescriptor, n: usize, k: u64) -> Result<Element> {
    let (s_raw, idx) = unpair(k);
    let s = (s_raw % SQL_STAGE_LIMIT) as u32;
    let leaves = (n as u64).pow(s);
    let word = match base.cardinality() {
        Card::Finite(m) => {
            // positionwise base-m digits
            let mut digits = Vec::with_capacity(leaves as usize);
            let mut rest = idx;
            for _ in 0..leaves {
                digits.push(enumerate(base, rest % m)?);
                rest /= m;
            }
            digits
        }
        Card::Infinite => {
            // iterated Cantor unpairing into `leaves` coordinates
            let mut digits = Vec::with_capacity(leaves as usize);
            let mut rest = idx;
            for i in 0..leaves {
                if i + 1 == leaves {
                    digits.push(enumerate(base, rest)?);
                } else {
                    let (head, tail) = unpair(rest);
                    digits.push(enumerate(base, head)?);
                    rest = tail;
                }
            }
            digits
        }
    };
    Ok(Element::stage(s, tuple_from_leaves(&word, n, s)))
}

fn tuple_from_leaves(leaves: &[Element], n: usize, depth: u32) -> SqTuple {
    if depth == 0 {
        return SqTuple::leaf(leaves[0].clone());
    }
    let chunk = leaves.len() / n;
    SqTuple::Node(
        (0..n)
            .map(|i| tuple_from_leaves(&leaves[i * chunk..(i + 1) * chunk], n, depth - 1))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn omega_is_identity() {
        assert_eq!(enumerate(&OrderDescriptor::Omega, 7).unwrap(), Element::Int(7));
    }

    #[test]
    fn eta_scheme_first_five() {
        let got: Vec<Element> = (0..5)
            .map(|k| enumerate(&OrderDescriptor::Eta, k).unwrap())
            .collect();
        let want = vec![
            Element::Rat(rat(0, 1)),
            Element::Rat(rat(1, 1)),
            Element::Rat(rat(-1, 1)),
            Element::Rat(rat(1, 2)),
            Element::Rat(rat(-1, 2)),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn calkin_wilf_prefix() {
        let want = [(1, 1), (1, 2), (2, 1), (1, 3), (3, 2), (2, 3), (3, 1)];
        for (j, (p, q)) in want.iter().enumerate() {
            assert_eq!(calkin_wilf(j as u64 + 1), rat(*p, *q));
        }
    }

    #[test]
    fn dyadic_words_in_length_lex_order() {
        let ws: Vec<String> = (0..7)
            .map(|k| Element::Word(word_at(k)).to_string())
            .collect();
        assert_eq!(ws, vec!["e", "L", "R", "LL", "LR", "RL", "RR"]);
    }

    #[test]
    fn unpair_inverts_pair() {
        for z in 0..5000 {
            let (i, j) = unpair(z);
            assert_eq!(pair(i, j), z);
        }
    }

    #[test]
    fn lex_pairing_decodes() {
        let d = OrderDescriptor::lex(vec![OrderDescriptor::Finite(2), OrderDescriptor::Eta]);
        // unpair(5) = (0, 2); eta index 2 is -1
        assert_eq!(unpair(5), (0, 2));
        assert_eq!(
            enumerate(&d, 5).unwrap(),
            Element::pair(Element::Int(0), Element::Rat(rat(-1, 1)))
        );
    }

    #[test]
    fn shuffle_skips_empty_colors() {
        let parts = vec![OrderDescriptor::Empty, OrderDescriptor::Finite(1)];
        let d = OrderDescriptor::Shuffle(parts);
        for k in 0..40 {
            let e = enumerate(&d, k).unwrap();
            e.validate(&d).unwrap();
            match &e {
                Element::RepPoint(b, _) => match b.as_ref() {
                    Element::Word(w) => assert_eq!(w.len() % 2, 1),
                    _ => panic!(),
                },
                _ => panic!(),
            }
        }
    }

    #[test]
    fn sqlimit_enumeration_is_valid_and_varied() {
        let d = OrderDescriptor::sqlimit(OrderDescriptor::Finite(2), 2);
        let mut stages = std::collections::BTreeSet::new();
        for k in 0..300 {
            let e = enumerate(&d, k).unwrap();
            e.validate(&d).unwrap();
            if let Element::Stage(i, _) = e {
                stages.insert(i);
            }
        }
        assert!(stages.contains(&0) && stages.contains(&1) && stages.contains(&2));
    }

    #[test]
    fn empty_order_has_no_enumeration() {
        assert!(enumerate(&OrderDescriptor::Empty, 0).is_err());
    }
}
