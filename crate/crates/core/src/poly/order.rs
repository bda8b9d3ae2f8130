use std::cmp::Ordering;

/// Monomial orders on exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    /// First variable most significant.
    Lex,
    /// Total degree, ties broken by the reverse-lexicographic rule.
    GrevLex,
    /// Elimination order: `eliminated` variables compared first, then `kept`;
    /// each block uses `inner` (which must be `Lex` or `GrevLex`).
    Block {
        eliminated: Vec<usize>,
        kept: Vec<usize>,
        inner: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Block order eliminating `eliminated` among `nvars` variables with
    /// grevlex inside each block.
    pub fn elimination(eliminated: &[usize], nvars: usize) -> MonomialOrder {
        let mut elim: Vec<usize> = eliminated.to_vec();
        elim.sort_unstable();
        elim.dedup();
        let kept = (0..nvars).filter(|i| !elim.contains(i)).collect();
        MonomialOrder::Block {
            eliminated: elim,
            kept,
            inner: Box::new(MonomialOrder::GrevLex),
        }
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b, 0..a.len()),
            MonomialOrder::Block {
                eliminated,
                kept,
                inner,
            } => inner
                .cmp_on(a, b, eliminated)
                .then_with(|| inner.cmp_on(a, b, kept)),
        }
    }

    fn cmp_on(&self, a: &[u32], b: &[u32], idx: &[usize]) -> Ordering {
        match self {
            MonomialOrder::Lex => {
                for &i in idx {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::GrevLex => grevlex(a, b, idx.iter().copied()),
            MonomialOrder::Block { .. } => panic!("nested block orders are not supported"),
        }
    }
}

fn grevlex<I>(a: &[u32], b: &[u32], idx: I) -> Ordering
where
    I: Iterator<Item = usize> + DoubleEndedIterator + Clone,
{
    let da: u64 = idx.clone().map(|i| a[i] as u64).sum();
    let db: u64 = idx.clone().map(|i| b[i] as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in idx.rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}
