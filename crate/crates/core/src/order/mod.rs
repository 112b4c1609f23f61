//! The universe of computable linear orders: constructors, points,
//! comparison, enumeration, metadata, and witness operations.

mod compare;
mod descriptor;
mod element;
mod enumerate;
mod meta;
mod witness;

use std::cmp::Ordering;

pub use compare::{compare, compare_words};
pub use descriptor::{Card, OrderDescriptor};
pub use element::{tuple_leaves, Element, Letter, Side, SqTuple};
pub use enumerate::{calkin_wilf, enumerate, pair, unpair, word_at};
pub use meta::{max_element, meta, min_element, nest_pairs, OrderMeta};
pub use witness::{
    dyadic_above, dyadic_below, dyadic_between, witness, word_value, ColorConstraint, WitnessKind,
};
pub use meta::EndKind;

use crate::{Error, Result};

/// A constructed order: a validated descriptor together with its operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Order {
    desc: OrderDescriptor,
}

/// Build an [`Order`] from a structurally valid descriptor.
pub fn construct(d: OrderDescriptor) -> Result<Order> {
    d.validate()?;
    Ok(Order { desc: d })
}

impl Order {
    pub fn new(d: OrderDescriptor) -> Result<Order> {
        construct(d)
    }

    pub fn descriptor(&self) -> &OrderDescriptor {
        &self.desc
    }

    pub fn compare(&self, x: &Element, y: &Element) -> Result<Ordering> {
        compare(&self.desc, x, y)
    }

    pub fn enumerate(&self, k: u64) -> Result<Element> {
        enumerate(&self.desc, k)
    }

    pub fn meta(&self) -> OrderMeta {
        meta(&self.desc)
    }

    pub fn min(&self) -> Option<Element> {
        min_element(&self.desc)
    }

    pub fn max(&self) -> Option<Element> {
        max_element(&self.desc)
    }

    pub fn witness(&self, kind: WitnessKind<'_>) -> Result<Element> {
        witness(&self.desc, kind, None)
    }

    pub fn witness_colored(
        &self,
        kind: WitnessKind<'_>,
        color: ColorConstraint,
    ) -> Result<Element> {
        witness(&self.desc, kind, Some(color))
    }

    pub fn validate(&self, x: &Element) -> Result<()> {
        x.validate(&self.desc)
    }

    pub fn cardinality(&self) -> Card {
        self.desc.cardinality()
    }

    /// The color (length residue mod `k`) of a point of a dyadic-based
    /// order: the word length for `dyadic`, the base word length for a
    /// shuffle point, the last coordinate's word length for a lex product
    /// ending in `dyadic`. `Rev` delegates to its inner order.
    pub fn color_of(&self, k: usize, x: &Element) -> Result<usize> {
        self.validate(x)?;
        color_of(&self.desc, k, x)
    }
}

pub fn color_of(d: &OrderDescriptor, k: usize, x: &Element) -> Result<usize> {
    if k == 0 {
        return Err(Error::ColorMismatch("modulus must be positive".into()));
    }
    match (d, x) {
        (OrderDescriptor::Dyadic, Element::Word(w)) => Ok(w.len() % k),
        (OrderDescriptor::Shuffle(parts), Element::RepPoint(b, _)) => {
            if k != parts.len() {
                return Err(Error::ColorMismatch(format!(
                    "shuffle has {} colors, asked for mod {k}",
                    parts.len()
                )));
            }
            match b.as_ref() {
                Element::Word(w) => Ok(w.len() % k),
                _ => Err(Error::InvalidElement("shuffle base must be a word".into())),
            }
        }
        (OrderDescriptor::Rev(i), _) => color_of(i, k, x),
        (OrderDescriptor::Lex(fs), Element::Pair(_, b)) => {
            let rest = if fs.len() == 2 {
                fs[1].clone()
            } else {
                OrderDescriptor::Lex(fs[1..].to_vec())
            };
            color_of(&rest, k, b)
        }
        _ => Err(Error::ColorMismatch(format!("order {d} is not colored"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructed_metas_match_spec_examples() {
        let o = construct(OrderDescriptor::Finite(3)).unwrap();
        let m = o.meta();
        assert!(m.has_min && m.has_max && !m.is_dense);

        let o = construct(OrderDescriptor::Shuffle(vec![
            OrderDescriptor::Finite(1),
            OrderDescriptor::Finite(2),
        ]))
        .unwrap();
        assert!(!o.meta().is_dense);

        let o = construct(OrderDescriptor::lex(vec![
            OrderDescriptor::Zeta,
            OrderDescriptor::Finite(2),
        ]))
        .unwrap();
        let m = o.meta();
        assert!(!m.has_min && !m.has_max && !m.is_dense);
    }

    #[test]
    fn endpoints_with_witnesses() {
        let o = construct(OrderDescriptor::Omega).unwrap();
        assert_eq!(o.min(), Some(Element::Int(0)));
        assert_eq!(o.max(), None);

        let o = construct(OrderDescriptor::lex(vec![
            OrderDescriptor::Finite(2),
            OrderDescriptor::Omega,
        ]))
        .unwrap();
        assert_eq!(o.min(), Some(Element::pair(Element::Int(0), Element::Int(0))));
        assert_eq!(o.max(), None);

        let o = construct(OrderDescriptor::rev(OrderDescriptor::Omega)).unwrap();
        assert_eq!(o.min(), None);
        assert_eq!(o.max(), Some(Element::Int(0)));
    }

    #[test]
    fn color_examples() {
        let o = construct(OrderDescriptor::Dyadic).unwrap();
        assert_eq!(o.color_of(3, &Element::word("LR")).unwrap(), 2);
        assert_eq!(o.color_of(2, &Element::word("")).unwrap(), 0);
    }

    #[test]
    fn both_residues_occur_between_l_and_r() {
        // density spot-check: words in the open interval (L, R) up to
        // length 6 realize both residues mod 2
        let o = construct(OrderDescriptor::Dyadic).unwrap();
        let l = Element::word("L");
        let r = Element::word("R");
        let mut seen = [false, false];
        for k in 0..127 {
            let w = o.enumerate(k).unwrap();
            if o.compare(&l, &w).unwrap() == Ordering::Less
                && o.compare(&w, &r).unwrap() == Ordering::Less
            {
                seen[o.color_of(2, &w).unwrap()] = true;
            }
        }
        assert_eq!(seen, [true, true]);
    }

    #[test]
    fn lex_color_uses_last_coordinate() {
        let d = OrderDescriptor::lex(vec![OrderDescriptor::Finite(5), OrderDescriptor::Dyadic]);
        let o = construct(d).unwrap();
        let p = Element::pair(Element::Int(3), Element::word("LRL"));
        assert_eq!(o.color_of(2, &p).unwrap(), 1);
    }
}
