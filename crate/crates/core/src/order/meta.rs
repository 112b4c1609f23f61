use serde::Serialize;

use crate::order::descriptor::{Card, OrderDescriptor};
use crate::order::element::{Element, Side, SqTuple};

/// End-of-order kind: endpoint present (`One`) or an ω-type ray (`Omega`).
/// All supported constructors are countable, so these are the only cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EndKind {
    One,
    Omega,
}

/// Exact endpoint/density metadata, computed structurally.
///
/// `is_dense` uses the no-adjacent-pair convention: orders with at most one
/// point count as dense (vacuously). This is what makes the product rule
/// `is_dense(lex(X,Y)) = is_dense(Y) ∧ (is_dense(X) ∨ ¬has_max(Y) ∨ ¬has_min(Y))`
/// exact, singleton factors included.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrderMeta {
    pub has_min: bool,
    pub has_max: bool,
    pub is_dense: bool,
    pub is_countable: bool,
    pub coinitiality_kind: EndKind,
    pub cofinality_kind: EndKind,
}

impl OrderMeta {
    fn new(has_min: bool, has_max: bool, is_dense: bool) -> OrderMeta {
        OrderMeta {
            has_min,
            has_max,
            is_dense,
            is_countable: true,
            coinitiality_kind: if has_min { EndKind::One } else { EndKind::Omega },
            cofinality_kind: if has_max { EndKind::One } else { EndKind::Omega },
        }
    }
}

pub fn meta(d: &OrderDescriptor) -> OrderMeta {
    if d.is_empty_order() {
        return OrderMeta::new(false, false, true);
    }
    match d {
        OrderDescriptor::Empty => unreachable!("handled above"),
        OrderDescriptor::Finite(n) => OrderMeta::new(true, true, *n == 1),
        OrderDescriptor::Omega => OrderMeta::new(true, false, false),
        OrderDescriptor::OmegaStar => OrderMeta::new(false, true, false),
        OrderDescriptor::Zeta => OrderMeta::new(false, false, false),
        OrderDescriptor::Eta | OrderDescriptor::Dyadic => OrderMeta::new(false, false, true),
        OrderDescriptor::Sum(l, r) => {
            if l.is_empty_order() {
                return meta(r);
            }
            if r.is_empty_order() {
                return meta(l);
            }
            let ml = meta(l);
            let mr = meta(r);
            // The only new adjacency a sum can create is max(left), min(right).
            let dense = ml.is_dense && mr.is_dense && !(ml.has_max && mr.has_min);
            OrderMeta::new(ml.has_min, mr.has_max, dense)
        }
        OrderDescriptor::Lex(fs) => meta_lex(&fs[..]),
        OrderDescriptor::Rev(i) => {
            let m = meta(i);
            OrderMeta::new(m.has_max, m.has_min, m.is_dense)
        }
        OrderDescriptor::Shuffle(parts) => {
            // Base colors are dense in the dyadic order, so adjacency can
            // only occur inside a single fiber.
            let dense = parts
                .iter()
                .filter(|p| !p.is_empty_order())
                .all(|p| meta(p).is_dense);
            OrderMeta::new(false, false, dense)
        }
        OrderDescriptor::SqLimit(b, _) => {
            // Diagonal embeddings preserve endpoints; stage lifting always
            // interpolates strictly between adjacent same-stage tuples, so
            // the limit is dense whenever it has two or more points (and
            // vacuously otherwise).
            let mb = meta(b);
            OrderMeta::new(mb.has_min, mb.has_max, true)
        }
    }
}

fn meta_lex(fs: &[OrderDescriptor]) -> OrderMeta {
    if fs.len() == 1 {
        return meta(&fs[0]);
    }
    let mx = meta(&fs[0]);
    let my = meta_lex(&fs[1..]);
    let has_min = mx.has_min && my.has_min;
    let has_max = mx.has_max && my.has_max;
    // (x, max) and (x', min) are adjacent iff x, x' are adjacent in X.
    let dense = my.is_dense && (mx.is_dense || !my.has_max || !my.has_min);
    OrderMeta::new(has_min, has_max, dense)
}

pub fn min_element(d: &OrderDescriptor) -> Option<Element> {
    if d.is_empty_order() {
        return None;
    }
    match d {
        OrderDescriptor::Empty => None,
        OrderDescriptor::Finite(_) | OrderDescriptor::Omega => Some(Element::Int(0)),
        OrderDescriptor::OmegaStar
        | OrderDescriptor::Zeta
        | OrderDescriptor::Eta
        | OrderDescriptor::Dyadic
        | OrderDescriptor::Shuffle(_) => None,
        OrderDescriptor::Sum(l, r) => {
            if l.is_empty_order() {
                min_element(r).map(|e| Element::tag(Side::Right, e))
            } else {
                min_element(l).map(|e| Element::tag(Side::Left, e))
            }
        }
        OrderDescriptor::Lex(fs) => {
            let mut mins = Vec::new();
            for f in fs {
                mins.push(min_element(f)?);
            }
            Some(nest_pairs(mins))
        }
        OrderDescriptor::Rev(i) => max_element(i),
        OrderDescriptor::SqLimit(b, _) => {
            min_element(b).map(|e| Element::Stage(0, SqTuple::leaf(e)))
        }
    }
}

pub fn max_element(d: &OrderDescriptor) -> Option<Element> {
    if d.is_empty_order() {
        return None;
    }
    match d {
        OrderDescriptor::Empty => None,
        OrderDescriptor::Finite(n) => Some(Element::Int((*n - 1) as i64)),
        OrderDescriptor::OmegaStar => Some(Element::Int(0)),
        OrderDescriptor::Omega
        | OrderDescriptor::Zeta
        | OrderDescriptor::Eta
        | OrderDescriptor::Dyadic
        | OrderDescriptor::Shuffle(_) => None,
        OrderDescriptor::Sum(l, r) => {
            if r.is_empty_order() {
                max_element(l).map(|e| Element::tag(Side::Left, e))
            } else {
                max_element(r).map(|e| Element::tag(Side::Right, e))
            }
        }
        OrderDescriptor::Lex(fs) => {
            let mut maxs = Vec::new();
            for f in fs {
                maxs.push(max_element(f)?);
            }
            Some(nest_pairs(maxs))
        }
        OrderDescriptor::Rev(i) => min_element(i),
        OrderDescriptor::SqLimit(b, _) => {
            max_element(b).map(|e| Element::Stage(0, SqTuple::leaf(e)))
        }
    }
}

/// Right-associate a list of coordinates into nested pairs.
pub fn nest_pairs(mut xs: Vec<Element>) -> Element {
    let last = xs.pop().expect("at least one coordinate");
    xs.into_iter().rev().fold(last, |acc, x| Element::pair(x, acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use OrderDescriptor::*;

    #[test]
    fn basic_metas() {
        let m = meta(&Finite(3));
        assert!(m.has_min && m.has_max && !m.is_dense);
        let m = meta(&Omega);
        assert!(m.has_min && !m.has_max && !m.is_dense);
        assert_eq!(m.coinitiality_kind, EndKind::One);
        assert_eq!(m.cofinality_kind, EndKind::Omega);
        let m = meta(&Eta);
        assert!(!m.has_min && !m.has_max && m.is_dense);
    }

    #[test]
    fn rev_swaps_endpoints() {
        let m = meta(&OrderDescriptor::rev(Omega));
        assert!(!m.has_min && m.has_max);
        assert_eq!(max_element(&OrderDescriptor::rev(Omega)), Some(Element::Int(0)));
    }

    #[test]
    fn lex_rules() {
        // zeta x 2: no endpoints, not dense
        let d = OrderDescriptor::lex(vec![Zeta, Finite(2)]);
        let m = meta(&d);
        assert!(!m.has_min && !m.has_max && !m.is_dense);
        // 2 x omega: min exists (pair of mins), no max
        let d = OrderDescriptor::lex(vec![Finite(2), Omega]);
        let m = meta(&d);
        assert!(m.has_min && !m.has_max);
        assert_eq!(
            min_element(&d),
            Some(Element::pair(Element::Int(0), Element::Int(0)))
        );
        // 2 x eta: dense because eta has no endpoints
        assert!(meta(&OrderDescriptor::lex(vec![Finite(2), Eta])).is_dense);
        // eta x 2: not dense (adjacent pairs inside each fiber)
        assert!(!meta(&OrderDescriptor::lex(vec![Eta, Finite(2)])).is_dense);
        // zeta x fin(1) behaves like zeta
        assert!(!meta(&OrderDescriptor::lex(vec![Zeta, Finite(1)])).is_dense);
        // eta x fin(1) behaves like eta
        assert!(meta(&OrderDescriptor::lex(vec![Eta, Finite(1)])).is_dense);
    }

    #[test]
    fn shuffle_density() {
        let not_dense = Shuffle(vec![Finite(1), Finite(2)]);
        assert!(!meta(&not_dense).is_dense);
        let dense = Shuffle(vec![Finite(1), Eta]);
        assert!(meta(&dense).is_dense);
        let m = meta(&not_dense);
        assert!(!m.has_min && !m.has_max);
    }

    #[test]
    fn sqlimit_inherits_endpoints() {
        let d = OrderDescriptor::sqlimit(Finite(2), 2);
        let m = meta(&d);
        assert!(m.has_min && m.has_max && m.is_dense);
        assert_eq!(
            min_element(&d),
            Some(Element::Stage(0, SqTuple::leaf(Element::Int(0))))
        );
        let z = OrderDescriptor::sqlimit(Zeta, 3);
        let m = meta(&z);
        assert!(!m.has_min && !m.has_max && m.is_dense);
    }

    #[test]
    fn sum_junction_adjacency() {
        // eta + eta is dense (no junction endpoints)
        assert!(meta(&OrderDescriptor::sum(Eta, Eta)).is_dense);
        // omega + omega: junction not adjacent (omega has no max), but omega itself not dense
        assert!(!meta(&OrderDescriptor::sum(Omega, Omega)).is_dense);
        // empty absorbs
        let m = meta(&OrderDescriptor::sum(Empty, Omega));
        assert!(m.has_min && !m.has_max);
        assert_eq!(
            min_element(&OrderDescriptor::sum(Empty, Omega)),
            Some(Element::tag(Side::Right, Element::Int(0)))
        );
    }
}
