use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// The supported ordered abelian groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ValueGroup {
    /// `ℤⁿ` ordered lexicographically, first coordinate most significant.
    ZnLex { rank: usize },
    /// `ℤ + ℤ√2 ⊂ ℝ`, a dense rank-one group.
    DenseSqrt2,
}

impl ValueGroup {
    pub fn zero(&self) -> GroupElement {
        match self {
            ValueGroup::ZnLex { rank } => GroupElement::Lex(vec![0; *rank]),
            ValueGroup::DenseSqrt2 => GroupElement::Sqrt2 { a: 0, b: 0 },
        }
    }

    /// Number of convex subgroups (= number of primes of the valuation ring).
    pub fn convex_subgroup_count(&self) -> usize {
        match self {
            ValueGroup::ZnLex { rank } => rank + 1,
            ValueGroup::DenseSqrt2 => 2,
        }
    }
}

/// An element of a [`ValueGroup`]. Elements of different groups never meet;
/// mixing them panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Lex(Vec<i64>),
    /// `a + b√2`.
    Sqrt2 {
        a: i64,
        b: i64,
    },
}

/// Sign of `x + y√2`, decided in integers.
fn sign_sqrt2(x: i128, y: i128) -> Ordering {
    match (x.cmp(&0), y.cmp(&0)) {
        (Ordering::Equal, o) | (o, Ordering::Equal) => o,
        (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
        (Ordering::Less, Ordering::Less) => Ordering::Less,
        (Ordering::Greater, Ordering::Less) => (x * x).cmp(&(2 * y * y)),
        (Ordering::Less, Ordering::Greater) => (2 * y * y).cmp(&(x * x)),
    }
}

impl GroupElement {
    pub fn is_zero(&self) -> bool {
        match self {
            GroupElement::Lex(v) => v.iter().all(|&x| x == 0),
            GroupElement::Sqrt2 { a, b } => *a == 0 && *b == 0,
        }
    }

    pub fn sign(&self) -> Ordering {
        match self {
            GroupElement::Lex(v) => v
                .iter()
                .map(|x| x.cmp(&0))
                .find(|o| *o != Ordering::Equal)
                .unwrap_or(Ordering::Equal),
            GroupElement::Sqrt2 { a, b } => sign_sqrt2(*a as i128, *b as i128),
        }
    }

    /// Scalar multiple.
    pub fn times(&self, k: i64) -> GroupElement {
        match self {
            GroupElement::Lex(v) => GroupElement::Lex(v.iter().map(|x| x * k).collect()),
            GroupElement::Sqrt2 { a, b } => GroupElement::Sqrt2 { a: a * k, b: b * k },
        }
    }

    /// Lex coordinates (empty for the dense group).
    pub fn coords(&self) -> &[i64] {
        match self {
            GroupElement::Lex(v) => v,
            GroupElement::Sqrt2 { .. } => &[],
        }
    }

    /// Plain-data form for reports: lex coordinates, or `[a, b]` for `a + b√2`.
    pub fn to_vec(&self) -> Vec<i64> {
        match self {
            GroupElement::Lex(v) => v.clone(),
            GroupElement::Sqrt2 { a, b } => vec![*a, *b],
        }
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (GroupElement::Lex(x), GroupElement::Lex(y)) => {
                assert_eq!(x.len(), y.len(), "lex elements of different rank");
                x.cmp(y)
            }
            (GroupElement::Sqrt2 { a, b }, GroupElement::Sqrt2 { a: c, b: d }) => {
                sign_sqrt2(*a as i128 - *c as i128, *b as i128 - *d as i128)
            }
            _ => panic!("comparing elements of different value groups"),
        }
    }
}

impl Add for &GroupElement {
    type Output = GroupElement;
    fn add(self, rhs: &GroupElement) -> GroupElement {
        match (self, rhs) {
            (GroupElement::Lex(x), GroupElement::Lex(y)) => {
                assert_eq!(x.len(), y.len(), "lex elements of different rank");
                GroupElement::Lex(x.iter().zip(y).map(|(a, b)| a + b).collect())
            }
            (GroupElement::Sqrt2 { a, b }, GroupElement::Sqrt2 { a: c, b: d }) => {
                GroupElement::Sqrt2 { a: a + c, b: b + d }
            }
            _ => panic!("adding elements of different value groups"),
        }
    }
}

impl Neg for &GroupElement {
    type Output = GroupElement;
    fn neg(self) -> GroupElement {
        self.times(-1)
    }
}

impl Sub for &GroupElement {
    type Output = GroupElement;
    fn sub(self, rhs: &GroupElement) -> GroupElement {
        self + &(-rhs)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Lex(v) => {
                let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", s.join(","))
            }
            GroupElement::Sqrt2 { a, b } => match (a, b) {
                (_, 0) => write!(f, "{a}"),
                (0, _) => write!(f, "{b}*sqrt2"),
                (_, b) if *b < 0 => write!(f, "{a} - {}*sqrt2", -b),
                _ => write!(f, "{a} + {b}*sqrt2"),
            },
        }
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A value: a group element or `+∞` (the value of 0).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Value {
    Finite(GroupElement),
    Infinity,
}

impl Value {
    pub fn finite(&self) -> Option<&GroupElement> {
        match self {
            Value::Finite(g) => Some(g),
            Value::Infinity => None,
        }
    }
}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Value {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Value::Infinity, Value::Infinity) => Ordering::Equal,
            (Value::Infinity, _) => Ordering::Greater,
            (_, Value::Infinity) => Ordering::Less,
            (Value::Finite(a), Value::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for &Value {
    type Output = Value;
    fn add(self, rhs: &Value) -> Value {
        match (self, rhs) {
            (Value::Finite(a), Value::Finite(b)) => Value::Finite(a + b),
            _ => Value::Infinity,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(g) => write!(f, "{g}"),
            Value::Infinity => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn dense_signs() {
        let e = |a, b| GroupElement::Sqrt2 { a, b };
        assert_eq!(e(-1, 1).sign(), Ordering::Greater); // √2 > 1
        assert_eq!(e(2, -1).sign(), Ordering::Greater);
        assert_eq!(e(1, -1).sign(), Ordering::Less);
        assert_eq!(e(-3, 2).sign(), Ordering::Less); // 2√2 < 3
        assert_eq!(e(0, 0).sign(), Ordering::Equal);
        assert!(e(0, 1) > e(1, 0));
    }

    #[test]
    fn lex_order() {
        let a = GroupElement::Lex(vec![1, -3]);
        assert_eq!(a.sign(), Ordering::Greater);
        assert!(GroupElement::Lex(vec![0, 5]) < GroupElement::Lex(vec![1, -100]));
        assert_eq!(a.to_string(), "(1,-3)");
        assert!(Value::Infinity > Value::Finite(a));
    }

    proptest! {
        #[test]
        fn dense_order_matches_floats(a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000, d in -1000i64..1000) {
            let x = GroupElement::Sqrt2 { a, b };
            let y = GroupElement::Sqrt2 { a: c, b: d };
            let fx = a as f64 + b as f64 * 2f64.sqrt();
            let fy = c as f64 + d as f64 * 2f64.sqrt();
            if (fx - fy).abs() > 1e-6 {
                prop_assert_eq!(x.cmp(&y), fx.partial_cmp(&fy).unwrap());
            } else {
                prop_assert_eq!((a, b), (c, d));
            }
            // translation invariance
            let z = GroupElement::Sqrt2 { a: 7, b: -3 };
            prop_assert_eq!((&x + &z).cmp(&(&y + &z)), x.cmp(&y));
        }

        #[test]
        fn lex_translation_invariant(x in proptest::collection::vec(-9i64..9, 3),
                                     y in proptest::collection::vec(-9i64..9, 3),
                                     z in proptest::collection::vec(-9i64..9, 3)) {
            let (x, y, z) = (GroupElement::Lex(x), GroupElement::Lex(y), GroupElement::Lex(z));
            prop_assert_eq!((&x + &z).cmp(&(&y + &z)), x.cmp(&y));
            prop_assert_eq!((&x - &y).sign(), x.cmp(&y));
        }
    }
}
