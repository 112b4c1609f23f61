use std::cmp::Ordering;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::order::compare::{compare, compare_words};
use crate::order::descriptor::OrderDescriptor;
use crate::order::element::{tuple_leaves, Element, Letter, Side, SqTuple};
use crate::order::enumerate::enumerate;
use crate::order::meta::{max_element, min_element};
use crate::{Error, Result};

/// What kind of point to produce.
#[derive(Debug, Clone, Copy)]
pub enum WitnessKind<'a> {
    Between(&'a Element, &'a Element),
    StrictlyBelow(&'a Element),
    StrictlyAbove(&'a Element),
}

/// Length-residue constraint for colored orders: the returned dyadic word
/// must have length ≡ `residue` (mod `modulus`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColorConstraint {
    pub modulus: usize,
    pub residue: usize,
}

/// Produce a point satisfying `kind`, chosen by fixed deterministic rules:
/// successor/predecessor on the discrete orders, arithmetic midpoint on the
/// rationals, shortest-then-lex-least word on the dyadic order, and
/// structured fallbacks on the composite constructors.
pub fn witness(
    d: &OrderDescriptor,
    kind: WitnessKind<'_>,
    color: Option<ColorConstraint>,
) -> Result<Element> {
    if let WitnessKind::Between(x, y) = kind {
        if compare(d, x, y)? != Ordering::Less {
            return Err(Error::InvalidElement(format!(
                "between requires {x} < {y} in {d}"
            )));
        }
    }
    match d {
        OrderDescriptor::Empty => Err(Error::NoWitness("empty order".into())),
        OrderDescriptor::Finite(n) => {
            no_color(color)?;
            int_witness(kind, Some(0), Some(*n as i64 - 1))
        }
        OrderDescriptor::Omega => {
            no_color(color)?;
            int_witness(kind, Some(0), None)
        }
        OrderDescriptor::OmegaStar => {
            no_color(color)?;
            int_witness(kind, None, Some(0))
        }
        OrderDescriptor::Zeta => {
            no_color(color)?;
            int_witness(kind, None, None)
        }
        OrderDescriptor::Eta => {
            no_color(color)?;
            rat_witness(kind)
        }
        OrderDescriptor::Dyadic => dyadic_witness(kind, color),
        OrderDescriptor::Sum(l, r) => {
            no_color(color)?;
            sum_witness(l, r, kind)
        }
        OrderDescriptor::Lex(fs) => lex_witness(fs, kind, color),
        OrderDescriptor::Rev(i) => {
            let flipped = match kind {
                WitnessKind::Between(x, y) => WitnessKind::Between(y, x),
                WitnessKind::StrictlyBelow(x) => WitnessKind::StrictlyAbove(x),
                WitnessKind::StrictlyAbove(x) => WitnessKind::StrictlyBelow(x),
            };
            witness(i, flipped, color)
        }
        OrderDescriptor::Shuffle(parts) => shuffle_witness(parts, kind, color),
        OrderDescriptor::SqLimit(b, n) => {
            no_color(color)?;
            sqlimit_witness(b, *n as usize, kind)
        }
    }
}

fn no_color(color: Option<ColorConstraint>) -> Result<()> {
    if color.is_some() {
        Err(Error::ColorMismatch(
            "color constraints apply only to dyadic-based orders".into(),
        ))
    } else {
        Ok(())
    }
}

fn int_of(e: &Element) -> Result<i64> {
    match e {
        Element::Int(v) => Ok(*v),
        _ => Err(Error::InvalidElement("expected integer point".into())),
    }
}

fn int_witness(kind: WitnessKind<'_>, lo: Option<i64>, hi: Option<i64>) -> Result<Element> {
    match kind {
        WitnessKind::Between(x, y) => {
            let (a, b) = (int_of(x)?, int_of(y)?);
            if a + 1 < b {
                Ok(Element::Int(a + 1))
            } else {
                Err(Error::NoWitness(format!("{a} and {b} are adjacent")))
            }
        }
        WitnessKind::StrictlyBelow(x) => {
            let a = int_of(x)?;
            if lo.is_some_and(|m| a <= m) {
                Err(Error::NoWitness(format!("{a} is minimal")))
            } else {
                Ok(Element::Int(a - 1))
            }
        }
        WitnessKind::StrictlyAbove(x) => {
            let a = int_of(x)?;
            if hi.is_some_and(|m| a >= m) {
                Err(Error::NoWitness(format!("{a} is maximal")))
            } else {
                Ok(Element::Int(a + 1))
            }
        }
    }
}

fn rat_of(e: &Element) -> Result<&BigRational> {
    match e {
        Element::Rat(q) => Ok(q),
        _ => Err(Error::InvalidElement("expected rational point".into())),
    }
}

fn rat_witness(kind: WitnessKind<'_>) -> Result<Element> {
    let one = BigRational::one();
    Ok(Element::Rat(match kind {
        WitnessKind::Between(x, y) => (rat_of(x)? + rat_of(y)?) / BigRational::from(BigInt::from(2)),
        WitnessKind::StrictlyBelow(x) => rat_of(x)? - &one,
        WitnessKind::StrictlyAbove(x) => rat_of(x)? + &one,
    }))
}

fn word_of(e: &Element) -> Result<&[Letter]> {
    match e {
        Element::Word(w) => Ok(w),
        _ => Err(Error::InvalidElement("expected dyadic word".into())),
    }
}

/// Value embedding of dyadic words into (0, 1): a word of length l with bit
/// value m (L=0, R=1, most significant first) maps to (2m+1) / 2^(l+1).
/// The embedding is order-preserving for the L < end-of-word < R comparison.
pub fn word_value(w: &[Letter]) -> BigRational {
    let mut m = BigInt::zero();
    for l in w {
        m = &m * 2 + if *l == Letter::R { 1 } else { 0 };
    }
    let num = m * 2 + 1;
    let den = BigInt::one() << (w.len() + 1);
    BigRational::new(num, den)
}

/// Least word (shortest, then smallest value) whose value lies strictly
/// between `lo` and `hi` (open bounds; `None` means 0 resp. 1), with length
/// constrained to `residue mod modulus` when a constraint is given.
fn least_word_in(
    lo: Option<&BigRational>,
    hi: Option<&BigRational>,
    color: Option<ColorConstraint>,
) -> Result<Vec<Letter>> {
    let zero = BigRational::zero();
    let one = BigRational::one();
    let lo = lo.unwrap_or(&zero);
    let hi = hi.unwrap_or(&one);
    if lo >= hi {
        return Err(Error::NoWitness("empty dyadic interval".into()));
    }
    let (start, step) = match color {
        Some(c) => {
            if c.modulus == 0 || c.residue >= c.modulus {
                return Err(Error::ColorMismatch(format!(
                    "residue {} out of range mod {}",
                    c.residue, c.modulus
                )));
            }
            (c.residue, c.modulus)
        }
        None => (0, 1),
    };
    let mut len = start;
    // Termination: once 2^(len+1) * (hi - lo) > 2 there is an odd integer in
    // the scaled interval; the cap is a defensive bound only.
    for _ in 0..100_000 {
        let scale = BigRational::from(BigInt::one() << (len + 1));
        let lo_scaled = lo * &scale;
        let hi_scaled = hi * &scale;
        let mut cand = lo_scaled.floor().to_integer() + 1;
        if (&cand % 2u8).is_zero() {
            cand += 1;
        }
        let cand_rat = BigRational::from(cand.clone());
        let max_num = (BigInt::one() << (len + 1)) - 1;
        if cand_rat < hi_scaled && cand <= max_num && cand >= BigInt::one() {
            let m = (cand - 1) / 2;
            return Ok(bits_to_word(&m, len));
        }
        len += step;
    }
    Err(Error::NoWitness("no dyadic word found within bounds".into()))
}

fn bits_to_word(m: &BigInt, len: usize) -> Vec<Letter> {
    let mut out = vec![Letter::L; len];
    let mut v = m.clone();
    for i in (0..len).rev() {
        if (&v % 2u8).is_one() {
            out[i] = Letter::R;
        }
        v /= 2;
    }
    out
}

pub fn dyadic_between(
    a: &[Letter],
    b: &[Letter],
    color: Option<ColorConstraint>,
) -> Result<Vec<Letter>> {
    least_word_in(Some(&word_value(a)), Some(&word_value(b)), color)
}

pub fn dyadic_above(a: &[Letter], color: Option<ColorConstraint>) -> Result<Vec<Letter>> {
    least_word_in(Some(&word_value(a)), None, color)
}

pub fn dyadic_below(a: &[Letter], color: Option<ColorConstraint>) -> Result<Vec<Letter>> {
    least_word_in(None, Some(&word_value(a)), color)
}

fn dyadic_witness(kind: WitnessKind<'_>, color: Option<ColorConstraint>) -> Result<Element> {
    let w = match kind {
        WitnessKind::Between(x, y) => dyadic_between(word_of(x)?, word_of(y)?, color)?,
        WitnessKind::StrictlyBelow(x) => dyadic_below(word_of(x)?, color)?,
        WitnessKind::StrictlyAbove(x) => dyadic_above(word_of(x)?, color)?,
    };
    Ok(Element::Word(w))
}

fn sum_witness(
    l: &OrderDescriptor,
    r: &OrderDescriptor,
    kind: WitnessKind<'_>,
) -> Result<Element> {
    let side_of = |e: &Element| -> Result<(Side, Element)> {
        match e {
            Element::Tag(s, inner) => Ok((*s, (**inner).clone())),
            _ => Err(Error::InvalidElement("expected sum tag".into())),
        }
    };
    match kind {
        WitnessKind::Between(x, y) => {
            let (sx, ix) = side_of(x)?;
            let (sy, iy) = side_of(y)?;
            match (sx, sy) {
                (Side::Left, Side::Left) => {
                    Ok(Element::tag(Side::Left, witness(l, WitnessKind::Between(&ix, &iy), None)?))
                }
                (Side::Right, Side::Right) => {
                    Ok(Element::tag(Side::Right, witness(r, WitnessKind::Between(&ix, &iy), None)?))
                }
                (Side::Left, Side::Right) => {
                    if let Ok(w) = witness(l, WitnessKind::StrictlyAbove(&ix), None) {
                        Ok(Element::tag(Side::Left, w))
                    } else if let Ok(w) = witness(r, WitnessKind::StrictlyBelow(&iy), None) {
                        Ok(Element::tag(Side::Right, w))
                    } else {
                        Err(Error::NoWitness("adjacent across sum junction".into()))
                    }
                }
                (Side::Right, Side::Left) => unreachable!("between precondition"),
            }
        }
        WitnessKind::StrictlyBelow(x) => {
            let (sx, ix) = side_of(x)?;
            match sx {
                Side::Left => Ok(Element::tag(Side::Left, witness(l, WitnessKind::StrictlyBelow(&ix), None)?)),
                Side::Right => {
                    if let Ok(w) = witness(r, WitnessKind::StrictlyBelow(&ix), None) {
                        Ok(Element::tag(Side::Right, w))
                    } else if !l.is_empty_order() {
                        Ok(Element::tag(Side::Left, top_representative(l)?))
                    } else {
                        Err(Error::NoWitness("below the minimum of the sum".into()))
                    }
                }
            }
        }
        WitnessKind::StrictlyAbove(x) => {
            let (sx, ix) = side_of(x)?;
            match sx {
                Side::Right => Ok(Element::tag(Side::Right, witness(r, WitnessKind::StrictlyAbove(&ix), None)?)),
                Side::Left => {
                    if let Ok(w) = witness(l, WitnessKind::StrictlyAbove(&ix), None) {
                        Ok(Element::tag(Side::Left, w))
                    } else if !r.is_empty_order() {
                        Ok(Element::tag(Side::Right, bottom_representative(r)?))
                    } else {
                        Err(Error::NoWitness("above the maximum of the sum".into()))
                    }
                }
            }
        }
    }
}

/// Deterministic pick of some element: the minimum when one exists, else the
/// first enumerated point.
fn bottom_representative(d: &OrderDescriptor) -> Result<Element> {
    match min_element(d) {
        Some(m) => Ok(m),
        None => enumerate(d, 0),
    }
}

fn top_representative(d: &OrderDescriptor) -> Result<Element> {
    match max_element(d) {
        Some(m) => Ok(m),
        None => enumerate(d, 0),
    }
}

fn lex_witness(
    fs: &[OrderDescriptor],
    kind: WitnessKind<'_>,
    color: Option<ColorConstraint>,
) -> Result<Element> {
    if fs.len() == 1 {
        return witness(&fs[0], kind, color);
    }
    if color.is_some() && *fs.last().unwrap() != OrderDescriptor::Dyadic {
        return Err(Error::ColorMismatch(
            "colored lex witnesses require a dyadic last factor".into(),
        ));
    }
    let head = &fs[0];
    let rest = &fs[1..];
    let rest_desc = if rest.len() == 1 {
        rest[0].clone()
    } else {
        OrderDescriptor::Lex(rest.to_vec())
    };
    let split = |e: &Element| -> Result<(Element, Element)> {
        match e {
            Element::Pair(a, b) => Ok(((**a).clone(), (**b).clone())),
            _ => Err(Error::InvalidElement("expected lex pair".into())),
        }
    };
    match kind {
        WitnessKind::Between(x, y) => {
            let (xa, xb) = split(x)?;
            let (ya, yb) = split(y)?;
            match compare(head, &xa, &ya)? {
                Ordering::Equal => Ok(Element::pair(
                    xa,
                    lex_witness(rest, WitnessKind::Between(&xb, &yb), color)?,
                )),
                Ordering::Less => {
                    if let Ok(w) = lex_witness(rest, WitnessKind::StrictlyAbove(&xb), color) {
                        Ok(Element::pair(xa, w))
                    } else if let Ok(w) = lex_witness(rest, WitnessKind::StrictlyBelow(&yb), color)
                    {
                        Ok(Element::pair(ya, w))
                    } else if color.is_none() {
                        let z = witness(head, WitnessKind::Between(&xa, &ya), None)?;
                        Ok(Element::pair(z, bottom_representative(&rest_desc)?))
                    } else {
                        Err(Error::NoWitness("no colored point between".into()))
                    }
                }
                Ordering::Greater => unreachable!("between precondition"),
            }
        }
        WitnessKind::StrictlyBelow(x) => {
            let (xa, xb) = split(x)?;
            if let Ok(w) = lex_witness(rest, WitnessKind::StrictlyBelow(&xb), color) {
                Ok(Element::pair(xa, w))
            } else if color.is_none() {
                let z = witness(head, WitnessKind::StrictlyBelow(&xa), None)?;
                Ok(Element::pair(z, top_representative(&rest_desc)?))
            } else {
                Err(Error::NoWitness("no colored point below".into()))
            }
        }
        WitnessKind::StrictlyAbove(x) => {
            let (xa, xb) = split(x)?;
            if let Ok(w) = lex_witness(rest, WitnessKind::StrictlyAbove(&xb), color) {
                Ok(Element::pair(xa, w))
            } else if color.is_none() {
                let z = witness(head, WitnessKind::StrictlyAbove(&xa), None)?;
                Ok(Element::pair(z, bottom_representative(&rest_desc)?))
            } else {
                Err(Error::NoWitness("no colored point above".into()))
            }
        }
    }
}

fn shuffle_witness(
    parts: &[OrderDescriptor],
    kind: WitnessKind<'_>,
    color: Option<ColorConstraint>,
) -> Result<Element> {
    let k = parts.len();
    if let Some(c) = color {
        if c.modulus != k {
            return Err(Error::ColorMismatch(format!(
                "shuffle has {k} colors, constraint is mod {}",
                c.modulus
            )));
        }
    }
    let split = |e: &Element| -> Result<(Vec<Letter>, Element)> {
        match e {
            Element::RepPoint(b, f) => Ok((word_of(b)?.to_vec(), (**f).clone())),
            _ => Err(Error::InvalidElement("expected shuffle point".into())),
        }
    };
    // Pick the target color: the constraint's residue, or the first color
    // with a nonempty part.
    let pick_color = || -> Result<usize> {
        match color {
            Some(c) => {
                if parts[c.residue].is_empty_order() {
                    Err(Error::NoWitness(format!("color {} is empty", c.residue)))
                } else {
                    Ok(c.residue)
                }
            }
            None => parts
                .iter()
                .position(|p| !p.is_empty_order())
                .ok_or_else(|| Error::NoWitness("all shuffle parts empty".into())),
        }
    };
    let constraint = |c: usize| ColorConstraint { modulus: k, residue: c };
    match kind {
        WitnessKind::Between(x, y) => {
            let (bx, fx) = split(x)?;
            let (by, fy) = split(y)?;
            if bx == by {
                let cb = bx.len() % k;
                if color.is_some_and(|c| c.residue != cb) {
                    // must move to a different base point, impossible inside
                    // a single fiber interval
                    return Err(Error::NoWitness(
                        "no base point of that color strictly between".into(),
                    ));
                }
                let f = witness(&parts[cb], WitnessKind::Between(&fx, &fy), None)?;
                Ok(Element::rep(Element::Word(bx), f))
            } else {
                let c = pick_color()?;
                let w = dyadic_between(&bx, &by, Some(constraint(c)))?;
                Ok(Element::rep(Element::Word(w), bottom_representative(&parts[c])?))
            }
        }
        WitnessKind::StrictlyBelow(x) => {
            let (bx, fx) = split(x)?;
            let cb = bx.len() % k;
            if color.is_none() {
                if let Ok(f) = witness(&parts[cb], WitnessKind::StrictlyBelow(&fx), None) {
                    return Ok(Element::rep(Element::Word(bx), f));
                }
            }
            let c = pick_color()?;
            let w = dyadic_below(&bx, Some(constraint(c)))?;
            Ok(Element::rep(Element::Word(w), top_representative(&parts[c])?))
        }
        WitnessKind::StrictlyAbove(x) => {
            let (bx, fx) = split(x)?;
            let cb = bx.len() % k;
            if color.is_none() {
                if let Ok(f) = witness(&parts[cb], WitnessKind::StrictlyAbove(&fx), None) {
                    return Ok(Element::rep(Element::Word(bx), f));
                }
            }
            let c = pick_color()?;
            let w = dyadic_above(&bx, Some(constraint(c)))?;
            Ok(Element::rep(Element::Word(w), bottom_representative(&parts[c])?))
        }
    }
}

fn stage_parts(e: &Element) -> Result<(u32, &SqTuple)> {
    match e {
        Element::Stage(i, t) => Ok((*i, t)),
        _ => Err(Error::InvalidElement("expected stage point".into())),
    }
}

fn sqlimit_witness(base: &OrderDescriptor, n: usize, kind: WitnessKind<'_>) -> Result<Element> {
    match kind {
        WitnessKind::Between(x, y) => {
            let (ix, tx) = stage_parts(x)?;
            let (iy, ty) = stage_parts(y)?;
            let stage = ix.max(iy);
            let tx = lift_times(tx, stage - ix, n);
            let ty = lift_times(ty, stage - iy, n);
            let wx: Vec<Element> = tuple_leaves(&tx).into_iter().cloned().collect();
            let wy: Vec<Element> = tuple_leaves(&ty).into_iter().cloned().collect();
            let p = first_difference(base, &wx, &wy)?;
            // 1. a base point strictly between the differing letters
            if let Ok(z) = witness(base, WitnessKind::Between(&wx[p], &wy[p]), None) {
                let mut w = wx.clone();
                w[p] = z;
                return Ok(stage_from_leaves(&w, n, stage));
            }
            // 2. raise a later letter of the lower word
            for q in p + 1..wx.len() {
                if let Ok(z) = witness(base, WitnessKind::StrictlyAbove(&wx[q]), None) {
                    let mut w = wx.clone();
                    w[q] = z;
                    return Ok(stage_from_leaves(&w, n, stage));
                }
            }
            // 3. lower a later letter of the upper word
            for q in p + 1..wy.len() {
                if let Ok(z) = witness(base, WitnessKind::StrictlyBelow(&wy[q]), None) {
                    let mut w = wy.clone();
                    w[q] = z;
                    return Ok(stage_from_leaves(&w, n, stage));
                }
            }
            // 4. go one stage deeper: lift the lower word and replace the
            // n-block at the difference with (wx[p], wy[p], wx[p], …)
            let mut w: Vec<Element> = Vec::with_capacity(wx.len() * n);
            for e in &wx {
                for _ in 0..n {
                    w.push(e.clone());
                }
            }
            w[n * p + 1] = wy[p].clone();
            Ok(stage_from_leaves(&w, n, stage + 1))
        }
        WitnessKind::StrictlyAbove(x) => {
            let (ix, tx) = stage_parts(x)?;
            let w: Vec<Element> = tuple_leaves(tx).into_iter().cloned().collect();
            for q in 0..w.len() {
                if let Ok(z) = witness(base, WitnessKind::StrictlyAbove(&w[q]), None) {
                    let mut v = w.clone();
                    v[q] = z;
                    return Ok(stage_from_leaves(&v, n, ix));
                }
            }
            Err(Error::NoWitness("point is the maximum of the limit".into()))
        }
        WitnessKind::StrictlyBelow(x) => {
            let (ix, tx) = stage_parts(x)?;
            let w: Vec<Element> = tuple_leaves(tx).into_iter().cloned().collect();
            for q in 0..w.len() {
                if let Ok(z) = witness(base, WitnessKind::StrictlyBelow(&w[q]), None) {
                    let mut v = w.clone();
                    v[q] = z;
                    return Ok(stage_from_leaves(&v, n, ix));
                }
            }
            Err(Error::NoWitness("point is the minimum of the limit".into()))
        }
    }
}

fn lift_times(t: &SqTuple, levels: u32, n: usize) -> SqTuple {
    let mut cur = t.clone();
    for _ in 0..levels {
        cur = cur.lift(n);
    }
    cur
}

fn first_difference(base: &OrderDescriptor, a: &[Element], b: &[Element]) -> Result<usize> {
    for (i, (x, y)) in a.iter().zip(b.iter()).enumerate() {
        if compare(base, x, y)? != Ordering::Equal {
            return Ok(i);
        }
    }
    Err(Error::InvalidElement("equal stage points".into()))
}

fn stage_from_leaves(leaves: &[Element], n: usize, depth: u32) -> Element {
    fn build(leaves: &[Element], n: usize, depth: u32) -> SqTuple {
        if depth == 0 {
            return SqTuple::leaf(leaves[0].clone());
        }
        let chunk = leaves.len() / n;
        SqTuple::Node(
            (0..n)
                .map(|i| build(&leaves[i * chunk..(i + 1) * chunk], n, depth - 1))
                .collect(),
        )
    }
    Element::stage(depth, build(leaves, n, depth))
}
