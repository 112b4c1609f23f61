use std::fmt;

use crate::{Error, Result};

/// Structural description of a computable countable linear order.
///
/// Descriptor equality is structural: two structurally equal descriptors
/// denote the same order, point for point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OrderDescriptor {
    /// The order with no points at all. Mostly useful as a shuffle part or
    /// as the default fiber of a class assignment ("replace with a gap").
    Empty,
    /// Finite chain `0 < 1 < … < n-1`, `n ≥ 1`.
    Finite(u64),
    /// The natural numbers `0 < 1 < 2 < …`.
    Omega,
    /// The reversed naturals `… < -2 < -1 < 0` (represented as non-positive
    /// integers in their usual order).
    OmegaStar,
    /// The integers.
    Zeta,
    /// The rationals.
    Eta,
    /// Finite words over `{L, R}` compared by first difference with
    /// `L < end-of-word < R`; a countable dense order without endpoints on
    /// which word length mod k is a dense k-coloring.
    Dyadic,
    /// Ordered sum: all of `left` below all of `right`.
    Sum(Box<OrderDescriptor>, Box<OrderDescriptor>),
    /// Lexicographic product of two or more factors, compared by first
    /// difference.
    Lex(Vec<OrderDescriptor>),
    /// The reverse order (same points, comparison flipped).
    Rev(Box<OrderDescriptor>),
    /// Dense shuffle: the dyadic base where a point of color `c`
    /// (word length mod k) carries a copy of `parts[c]`. Empty parts are
    /// permitted: points of that color simply do not exist.
    Shuffle(Vec<OrderDescriptor>),
    /// Direct limit of `base^(n^i)` under leafwise diagonal embeddings;
    /// an order isomorphic to its own `n`-th power.
    SqLimit(Box<OrderDescriptor>, u32),
}

/// Cardinality summary used by metadata and enumeration rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Card {
    Finite(u64),
    Infinite,
}

impl Card {
    pub fn is_zero(self) -> bool {
        self == Card::Finite(0)
    }

    fn mul(self, other: Card) -> Card {
        match (self, other) {
            (Card::Finite(0), _) | (_, Card::Finite(0)) => Card::Finite(0),
            (Card::Finite(a), Card::Finite(b)) => match a.checked_mul(b) {
                Some(p) => Card::Finite(p),
                None => Card::Infinite,
            },
            _ => Card::Infinite,
        }
    }

    fn add(self, other: Card) -> Card {
        match (self, other) {
            (Card::Finite(a), Card::Finite(b)) => Card::Finite(a.saturating_add(b)),
            _ => Card::Infinite,
        }
    }
}

impl OrderDescriptor {
    pub fn lex(factors: Vec<OrderDescriptor>) -> OrderDescriptor {
        OrderDescriptor::Lex(factors)
    }

    pub fn sum(left: OrderDescriptor, right: OrderDescriptor) -> OrderDescriptor {
        OrderDescriptor::Sum(Box::new(left), Box::new(right))
    }

    pub fn rev(inner: OrderDescriptor) -> OrderDescriptor {
        OrderDescriptor::Rev(Box::new(inner))
    }

    pub fn sqlimit(base: OrderDescriptor, n: u32) -> OrderDescriptor {
        OrderDescriptor::SqLimit(Box::new(base), n)
    }

    /// Structural validity: arities and counts in range, recursively.
    pub fn validate(&self) -> Result<()> {
        match self {
            OrderDescriptor::Empty
            | OrderDescriptor::Omega
            | OrderDescriptor::OmegaStar
            | OrderDescriptor::Zeta
            | OrderDescriptor::Eta
            | OrderDescriptor::Dyadic => Ok(()),
            OrderDescriptor::Finite(n) => {
                if *n == 0 {
                    Err(Error::InvalidDescriptor("fin(n) requires n >= 1".into()))
                } else {
                    Ok(())
                }
            }
            OrderDescriptor::Sum(l, r) => {
                l.validate()?;
                r.validate()
            }
            OrderDescriptor::Lex(fs) => {
                if fs.len() < 2 {
                    return Err(Error::InvalidDescriptor(
                        "lex requires at least 2 factors".into(),
                    ));
                }
                fs.iter().try_for_each(|f| f.validate())
            }
            OrderDescriptor::Rev(i) => i.validate(),
            OrderDescriptor::Shuffle(parts) => {
                if parts.is_empty() {
                    return Err(Error::InvalidDescriptor(
                        "shuffle requires at least 1 part".into(),
                    ));
                }
                parts.iter().try_for_each(|p| p.validate())
            }
            OrderDescriptor::SqLimit(b, n) => {
                if *n < 2 {
                    return Err(Error::InvalidDescriptor(
                        "sqlimit power must be >= 2".into(),
                    ));
                }
                b.validate()
            }
        }
    }

    pub fn cardinality(&self) -> Card {
        match self {
            OrderDescriptor::Empty => Card::Finite(0),
            OrderDescriptor::Finite(n) => Card::Finite(*n),
            OrderDescriptor::Omega
            | OrderDescriptor::OmegaStar
            | OrderDescriptor::Zeta
            | OrderDescriptor::Eta
            | OrderDescriptor::Dyadic => Card::Infinite,
            OrderDescriptor::Sum(l, r) => l.cardinality().add(r.cardinality()),
            OrderDescriptor::Lex(fs) => fs
                .iter()
                .map(|f| f.cardinality())
                .fold(Card::Finite(1), Card::mul),
            OrderDescriptor::Rev(i) => i.cardinality(),
            OrderDescriptor::Shuffle(parts) => {
                if parts.iter().all(|p| p.cardinality().is_zero()) {
                    Card::Finite(0)
                } else {
                    Card::Infinite
                }
            }
            OrderDescriptor::SqLimit(b, _) => match b.cardinality() {
                Card::Finite(0) => Card::Finite(0),
                Card::Finite(1) => Card::Finite(1),
                _ => Card::Infinite,
            },
        }
    }

    pub fn is_empty_order(&self) -> bool {
        self.cardinality().is_zero()
    }

    /// The descriptor of the reversed order, collapsing double reversals.
    pub fn reversed(&self) -> OrderDescriptor {
        match self {
            OrderDescriptor::Rev(i) => (**i).clone(),
            other => OrderDescriptor::rev(other.clone()),
        }
    }
}

impl fmt::Display for OrderDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderDescriptor::Empty => write!(f, "empty"),
            OrderDescriptor::Finite(n) => write!(f, "fin({n})"),
            OrderDescriptor::Omega => write!(f, "omega"),
            OrderDescriptor::OmegaStar => write!(f, "omegastar"),
            OrderDescriptor::Zeta => write!(f, "zeta"),
            OrderDescriptor::Eta => write!(f, "eta"),
            OrderDescriptor::Dyadic => write!(f, "dyadic"),
            OrderDescriptor::Sum(l, r) => write!(f, "sum({l},{r})"),
            OrderDescriptor::Lex(fs) => {
                write!(f, "lex(")?;
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            OrderDescriptor::Rev(i) => write!(f, "rev({i})"),
            OrderDescriptor::Shuffle(parts) => {
                write!(f, "shuffle({};", parts.len())?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            OrderDescriptor::SqLimit(b, n) => write!(f, "sqlimit({b},{n})"),
        }
    }
}
