use std::cmp::Ordering;

use crate::order::descriptor::OrderDescriptor;
use crate::order::element::{Element, Letter, Side, SqTuple};
use crate::{Error, Result};

/// Total-order comparison of two valid points of `d`, by structural
/// recursion over the descriptor.
pub fn compare(d: &OrderDescriptor, x: &Element, y: &Element) -> Result<Ordering> {
    match (d, x, y) {
        (
            OrderDescriptor::Finite(_)
            | OrderDescriptor::Omega
            | OrderDescriptor::OmegaStar
            | OrderDescriptor::Zeta,
            Element::Int(a),
            Element::Int(b),
        ) => Ok(a.cmp(b)),
        (OrderDescriptor::Eta, Element::Rat(a), Element::Rat(b)) => Ok(a.cmp(b)),
        (OrderDescriptor::Dyadic, Element::Word(a), Element::Word(b)) => Ok(compare_words(a, b)),
        (OrderDescriptor::Sum(l, r), Element::Tag(sa, ia), Element::Tag(sb, ib)) => {
            match (sa, sb) {
                (Side::Left, Side::Right) => Ok(Ordering::Less),
                (Side::Right, Side::Left) => Ok(Ordering::Greater),
                (Side::Left, Side::Left) => compare(l, ia, ib),
                (Side::Right, Side::Right) => compare(r, ia, ib),
            }
        }
        (OrderDescriptor::Lex(fs), _, _) => compare_lex(fs, x, y),
        (OrderDescriptor::Rev(i), _, _) => Ok(compare(i, x, y)?.reverse()),
        (
            OrderDescriptor::Shuffle(parts),
            Element::RepPoint(bx, fx),
            Element::RepPoint(by, fy),
        ) => {
            let base_cmp = compare_words(word_of(bx)?, word_of(by)?);
            if base_cmp != Ordering::Equal {
                return Ok(base_cmp);
            }
            let color = word_of(bx)?.len() % parts.len();
            compare(&parts[color], fx, fy)
        }
        (OrderDescriptor::SqLimit(b, n), Element::Stage(ix, tx), Element::Stage(iy, ty)) => {
            compare_stages(b, *n as usize, *ix, tx, *iy, ty)
        }
        _ => Err(Error::InvalidElement(format!(
            "cannot compare {x} and {y} in {d}"
        ))),
    }
}

/// First-difference comparison with `L < end-of-word < R`.
pub fn compare_words(a: &[Letter], b: &[Letter]) -> Ordering {
    let mut i = 0;
    loop {
        match (a.get(i), b.get(i)) {
            (None, None) => return Ordering::Equal,
            (Some(Letter::L), None) => return Ordering::Less,
            (Some(Letter::R), None) => return Ordering::Greater,
            (None, Some(Letter::L)) => return Ordering::Greater,
            (None, Some(Letter::R)) => return Ordering::Less,
            (Some(la), Some(lb)) => {
                if la != lb {
                    return la.cmp(lb);
                }
            }
        }
        i += 1;
    }
}

fn compare_lex(fs: &[OrderDescriptor], x: &Element, y: &Element) -> Result<Ordering> {
    if fs.len() == 1 {
        return compare(&fs[0], x, y);
    }
    match (x, y) {
        (Element::Pair(xa, xb), Element::Pair(ya, yb)) => {
            let c = compare(&fs[0], xa, ya)?;
            if c != Ordering::Equal {
                Ok(c)
            } else {
                compare_lex(&fs[1..], xb, yb)
            }
        }
        _ => Err(Error::InvalidElement("lex point must be a pair".into())),
    }
}

fn word_of<'a>(e: &'a Element) -> Result<&'a Vec<Letter>> {
    match e {
        Element::Word(w) => Ok(w),
        _ => Err(Error::InvalidElement("expected a dyadic word".into())),
    }
}

fn compare_stages(
    base: &OrderDescriptor,
    n: usize,
    ix: u32,
    tx: &SqTuple,
    iy: u32,
    ty: &SqTuple,
) -> Result<Ordering> {
    // Lift the lower-stage operand through the diagonal embedding, then
    // compare complete same-depth trees lexicographically.
    let (lx, ly);
    let (tx, ty) = if ix < iy {
        lx = lift_to(tx, iy - ix, n);
        (&lx, ty)
    } else if iy < ix {
        ly = lift_to(ty, ix - iy, n);
        (tx, &ly)
    } else {
        (tx, ty)
    };
    compare_tuples(base, tx, ty)
}

fn lift_to(t: &SqTuple, levels: u32, n: usize) -> SqTuple {
    let mut cur = t.clone();
    for _ in 0..levels {
        cur = cur.lift(n);
    }
    cur
}

fn compare_tuples(base: &OrderDescriptor, a: &SqTuple, b: &SqTuple) -> Result<Ordering> {
    match (a, b) {
        (SqTuple::Leaf(x), SqTuple::Leaf(y)) => compare(base, x, y),
        (SqTuple::Node(xs), SqTuple::Node(ys)) => {
            for (x, y) in xs.iter().zip(ys.iter()) {
                let c = compare_tuples(base, x, y)?;
                if c != Ordering::Equal {
                    return Ok(c);
                }
            }
            Ok(Ordering::Equal)
        }
        _ => Err(Error::InvalidElement("ragged stage tuples".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::meta::nest_pairs;

    fn lt(d: &OrderDescriptor, x: &Element, y: &Element) {
        assert_eq!(compare(d, x, y).unwrap(), Ordering::Less, "{x} < {y} in {d}");
        assert_eq!(compare(d, y, x).unwrap(), Ordering::Greater);
        assert_eq!(compare(d, x, x).unwrap(), Ordering::Equal);
    }

    #[test]
    fn finite_and_zeta() {
        lt(&OrderDescriptor::Finite(3), &Element::Int(0), &Element::Int(2));
        let d = OrderDescriptor::lex(vec![OrderDescriptor::Zeta, OrderDescriptor::Finite(2)]);
        lt(
            &d,
            &Element::pair(Element::Int(-1), Element::Int(1)),
            &Element::pair(Element::Int(0), Element::Int(0)),
        );
    }

    #[test]
    fn dyadic_word_order() {
        // L < LR because end-of-word < R
        lt(&OrderDescriptor::Dyadic, &Element::word("L"), &Element::word("LR"));
        // LL < L < e < R < RR
        lt(&OrderDescriptor::Dyadic, &Element::word("LL"), &Element::word("L"));
        lt(&OrderDescriptor::Dyadic, &Element::word("L"), &Element::word(""));
        lt(&OrderDescriptor::Dyadic, &Element::word(""), &Element::word("R"));
        lt(&OrderDescriptor::Dyadic, &Element::word("R"), &Element::word("RR"));
        lt(&OrderDescriptor::Dyadic, &Element::word("RL"), &Element::word("R"));
    }

    #[test]
    fn rev_inverts() {
        let d = OrderDescriptor::rev(OrderDescriptor::Omega);
        lt(&d, &Element::Int(5), &Element::Int(0));
    }

    #[test]
    fn lex_three_factors() {
        let d = OrderDescriptor::lex(vec![
            OrderDescriptor::Finite(2),
            OrderDescriptor::Finite(2),
            OrderDescriptor::Finite(2),
        ]);
        let p = |a: i64, b: i64, c: i64| {
            nest_pairs(vec![Element::Int(a), Element::Int(b), Element::Int(c)])
        };
        lt(&d, &p(0, 1, 1), &p(1, 0, 0));
        lt(&d, &p(1, 0, 0), &p(1, 0, 1));
    }

    #[test]
    fn stage_comparison_lifts() {
        let d = OrderDescriptor::sqlimit(OrderDescriptor::Finite(2), 2);
        let zero = Element::Stage(0, SqTuple::leaf(Element::Int(0)));
        let one = Element::Stage(0, SqTuple::leaf(Element::Int(1)));
        let mid = Element::stage(
            1,
            SqTuple::Node(vec![SqTuple::leaf(Element::Int(0)), SqTuple::leaf(Element::Int(1))]),
        );
        lt(&d, &zero, &mid);
        lt(&d, &mid, &one);
        if let (OrderDescriptor::SqLimit(b, n), Element::Stage(i, t)) = (&d, &mid) {
            assert_eq!(
                compare_stages(b, *n as usize, *i, t, *i, t).unwrap(),
                Ordering::Equal
            );
        }
    }
}
