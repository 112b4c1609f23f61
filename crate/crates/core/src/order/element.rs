use std::fmt;

use num::BigRational;

use crate::order::descriptor::OrderDescriptor;
use crate::{Error, Result};

/// A letter of the dyadic alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    L,
    R,
}

/// Side tag for points of an ordered sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A point of a specific order. An `Element` is only meaningful relative to
/// an [`OrderDescriptor`]; validity is checkable with [`Element::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    /// Point of `Finite`/`Omega`/`OmegaStar`/`Zeta`.
    Int(i64),
    /// Point of `Eta`: exact rational (kept in lowest terms by construction).
    Rat(BigRational),
    /// Point of `Dyadic`: a finite word over `{L, R}`, possibly empty.
    Word(Vec<Letter>),
    /// Point of a two-or-more-factor `Lex`; longer products nest to the right.
    Pair(Box<Element>, Box<Element>),
    /// Point of a `Sum`.
    Tag(Side, Box<Element>),
    /// Point of a `Shuffle`: base point and a fiber point of the part
    /// selected by the base point's color.
    RepPoint(Box<Element>, Box<Element>),
    /// Point of a `SqLimit`: stage index and a complete `n`-ary tuple tree of
    /// that depth, kept in canonical (non-diagonal) form.
    Stage(u32, SqTuple),
}

/// Complete `n`-ary tuple tree of base elements; depth equals the stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SqTuple {
    Leaf(Box<Element>),
    Node(Vec<SqTuple>),
}

impl SqTuple {
    pub fn leaf(e: Element) -> SqTuple {
        SqTuple::Leaf(Box::new(e))
    }

    pub fn depth(&self) -> u32 {
        match self {
            SqTuple::Leaf(_) => 0,
            SqTuple::Node(cs) => 1 + cs.first().map_or(0, |c| c.depth()),
        }
    }

    /// Replace every leaf `x` with the `n`-tuple `(x, …, x)`; this is the
    /// stage-raising diagonal embedding.
    pub fn lift(&self, n: usize) -> SqTuple {
        match self {
            SqTuple::Leaf(x) => {
                SqTuple::Node(vec![SqTuple::Leaf(x.clone()); n])
            }
            SqTuple::Node(cs) => SqTuple::Node(cs.iter().map(|c| c.lift(n)).collect()),
        }
    }

    /// Inverse of [`SqTuple::lift`] when it applies: collapse every
    /// bottom-level constant tuple to its single value.
    fn collapse(&self) -> Option<SqTuple> {
        match self {
            SqTuple::Leaf(_) => None,
            SqTuple::Node(cs) => {
                if cs.iter().all(|c| matches!(c, SqTuple::Leaf(_))) {
                    let first = match &cs[0] {
                        SqTuple::Leaf(x) => x,
                        SqTuple::Node(_) => unreachable!(),
                    };
                    if cs.iter().all(|c| matches!(c, SqTuple::Leaf(x) if x == first)) {
                        Some(SqTuple::Leaf(first.clone()))
                    } else {
                        None
                    }
                } else {
                    let collapsed: Option<Vec<SqTuple>> =
                        cs.iter().map(|c| c.collapse()).collect();
                    collapsed.map(SqTuple::Node)
                }
            }
        }
    }

    fn for_each_leaf<'a>(&'a self, f: &mut impl FnMut(&'a Element)) {
        match self {
            SqTuple::Leaf(x) => f(x),
            SqTuple::Node(cs) => cs.iter().for_each(|c| c.for_each_leaf(f)),
        }
    }
}

impl Element {
    pub fn pair(a: Element, b: Element) -> Element {
        Element::Pair(Box::new(a), Box::new(b))
    }

    pub fn tag(side: Side, e: Element) -> Element {
        Element::Tag(side, Box::new(e))
    }

    pub fn rep(base: Element, fiber: Element) -> Element {
        Element::RepPoint(Box::new(base), Box::new(fiber))
    }

    pub fn rat(num: i64, den: i64) -> Element {
        Element::Rat(BigRational::new(num.into(), den.into()))
    }

    pub fn word(s: &str) -> Element {
        Element::Word(
            s.chars()
                .map(|c| if c == 'L' { Letter::L } else { Letter::R })
                .collect(),
        )
    }

    /// Canonical stage point: collapses diagonal tuples until the form is
    /// canonical (stage 0, or a tuple that is not the lift of a lower stage).
    pub fn stage(i: u32, t: SqTuple) -> Element {
        let mut stage = i;
        let mut tuple = t;
        while stage > 0 {
            match tuple.collapse() {
                Some(smaller) => {
                    tuple = smaller;
                    stage -= 1;
                }
                None => break,
            }
        }
        Element::Stage(stage, tuple)
    }

    /// Check that `self` is a valid point of the order denoted by `d`.
    pub fn validate(&self, d: &OrderDescriptor) -> Result<()> {
        match (d, self) {
            (OrderDescriptor::Empty, _) => Err(Error::InvalidElement(
                "the empty order has no points".into(),
            )),
            (OrderDescriptor::Finite(n), Element::Int(v)) => {
                if *v >= 0 && (*v as u64) < *n {
                    Ok(())
                } else {
                    Err(Error::InvalidElement(format!("{v} out of range for fin({n})")))
                }
            }
            (OrderDescriptor::Omega, Element::Int(v)) => {
                if *v >= 0 {
                    Ok(())
                } else {
                    Err(Error::InvalidElement(format!("{v} negative for omega")))
                }
            }
            (OrderDescriptor::OmegaStar, Element::Int(v)) => {
                if *v <= 0 {
                    Ok(())
                } else {
                    Err(Error::InvalidElement(format!("{v} positive for omegastar")))
                }
            }
            (OrderDescriptor::Zeta, Element::Int(_)) => Ok(()),
            (OrderDescriptor::Eta, Element::Rat(_)) => Ok(()),
            (OrderDescriptor::Dyadic, Element::Word(_)) => Ok(()),
            (OrderDescriptor::Sum(l, r), Element::Tag(side, inner)) => match side {
                Side::Left => inner.validate(l),
                Side::Right => inner.validate(r),
            },
            (OrderDescriptor::Lex(fs), _) => {
                let mut cur = self;
                for (i, f) in fs.iter().enumerate() {
                    if i + 1 == fs.len() {
                        return cur.validate(f);
                    }
                    match cur {
                        Element::Pair(a, b) => {
                            a.validate(f)?;
                            cur = b;
                        }
                        _ => {
                            return Err(Error::InvalidElement(
                                "lex point must be a nested pair".into(),
                            ))
                        }
                    }
                }
                unreachable!("lex has >= 2 factors")
            }
            (OrderDescriptor::Rev(i), _) => self.validate(i),
            (OrderDescriptor::Shuffle(parts), Element::RepPoint(base, fiber)) => {
                base.validate(&OrderDescriptor::Dyadic)?;
                let color = match base.as_ref() {
                    Element::Word(w) => w.len() % parts.len(),
                    _ => unreachable!(),
                };
                fiber.validate(&parts[color])
            }
            (OrderDescriptor::SqLimit(b, n), Element::Stage(i, t)) => {
                if t.depth() != *i {
                    return Err(Error::InvalidElement(format!(
                        "stage {i} tuple has depth {}",
                        t.depth()
                    )));
                }
                validate_tuple(t, b, *n as usize)?;
                if *i > 0 && t.collapse().is_some() {
                    return Err(Error::InvalidElement(
                        "stage tuple is a diagonal; not canonical".into(),
                    ));
                }
                Ok(())
            }
            _ => Err(Error::InvalidElement(format!(
                "element shape does not match order {d}"
            ))),
        }
    }
}

fn validate_tuple(t: &SqTuple, base: &OrderDescriptor, n: usize) -> Result<()> {
    match t {
        SqTuple::Leaf(x) => x.validate(base),
        SqTuple::Node(cs) => {
            if cs.len() != n {
                return Err(Error::InvalidElement(format!(
                    "stage tuple arity {} != {n}",
                    cs.len()
                )));
            }
            let d = cs[0].depth();
            if cs.iter().any(|c| c.depth() != d) {
                return Err(Error::InvalidElement("ragged stage tuple".into()));
            }
            cs.iter().try_for_each(|c| validate_tuple(c, base, n))
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Int(v) => write!(f, "{v}"),
            Element::Rat(q) => write!(f, "{q}"),
            Element::Word(w) => {
                if w.is_empty() {
                    write!(f, "e")
                } else {
                    for l in w {
                        write!(f, "{}", if *l == Letter::L { 'L' } else { 'R' })?;
                    }
                    Ok(())
                }
            }
            Element::Pair(a, b) => write!(f, "({a},{b})"),
            Element::Tag(Side::Left, e) => write!(f, "L:{e}"),
            Element::Tag(Side::Right, e) => write!(f, "R:{e}"),
            Element::RepPoint(b, i) => write!(f, "({b} ; {i})"),
            Element::Stage(i, t) => {
                write!(f, "stage{i}:")?;
                fmt_tuple(t, f)
            }
        }
    }
}

fn fmt_tuple(t: &SqTuple, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match t {
        SqTuple::Leaf(x) => write!(f, "{x}"),
        SqTuple::Node(cs) => {
            write!(f, "(")?;
            for (i, c) in cs.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                fmt_tuple(c, f)?;
            }
            write!(f, ")")
        }
    }
}

/// Flattened leaf sequence of a stage tuple, in lexicographic position order.
pub fn tuple_leaves(t: &SqTuple) -> Vec<&Element> {
    let mut out = Vec::new();
    t.for_each_leaf(&mut |x| out.push(x));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_range_checked() {
        let d = OrderDescriptor::Finite(2);
        assert!(Element::Int(1).validate(&d).is_ok());
        assert!(Element::Int(5).validate(&d).is_err());
        assert!(Element::Int(-1).validate(&d).is_err());
    }

    #[test]
    fn shuffle_fiber_must_match_color() {
        let d = OrderDescriptor::Shuffle(vec![
            OrderDescriptor::Finite(1),
            OrderDescriptor::Finite(2),
        ]);
        // color of "L" is 1, so the fiber lives in fin(2)
        let ok = Element::rep(Element::word("L"), Element::Int(1));
        assert!(ok.validate(&d).is_ok());
        // color of "" is 0, fiber must be in fin(1)
        let bad = Element::rep(Element::word(""), Element::Int(1));
        assert!(bad.validate(&d).is_err());
    }

    #[test]
    fn stage_canonicalization_collapses_diagonals() {
        let d = OrderDescriptor::sqlimit(OrderDescriptor::Finite(2), 2);
        let diag = SqTuple::Node(vec![SqTuple::leaf(Element::Int(1)), SqTuple::leaf(Element::Int(1))]);
        let e = Element::stage(1, diag);
        assert_eq!(e, Element::Stage(0, SqTuple::leaf(Element::Int(1))));
        assert!(e.validate(&d).is_ok());

        let non_diag = SqTuple::Node(vec![
            SqTuple::leaf(Element::Int(0)),
            SqTuple::leaf(Element::Int(1)),
        ]);
        let e2 = Element::stage(1, non_diag.clone());
        assert_eq!(e2, Element::Stage(1, non_diag));
        assert!(e2.validate(&d).is_ok());
    }

    #[test]
    fn lift_then_canonicalize_is_identity() {
        let t = SqTuple::Node(vec![
            SqTuple::leaf(Element::Int(0)),
            SqTuple::leaf(Element::Int(1)),
        ]);
        let lifted = t.lift(2);
        assert_eq!(lifted.depth(), 2);
        assert_eq!(Element::stage(2, lifted), Element::Stage(1, t));
    }
}
