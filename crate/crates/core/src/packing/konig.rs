use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::sets::VertexSet;

fn is_unit_state(edges: &[VertexSet]) -> bool {
    edges.iter().any(|e| e.is_empty())
}

/// `τ`: size of a smallest vertex cover, with one such cover. The unit state
/// (an empty edge) and the edgeless hypergraph both give `(0, ∅)`.
pub fn min_transversal(edges: &[VertexSet]) -> (usize, VertexSet) {
    if edges.is_empty() || is_unit_state(edges) {
        return (0, VertexSet::default());
    }
    // any cover beats taking one vertex per edge
    let mut best = (usize::MAX, VertexSet::default());
    let greedy = edges.iter().fold(VertexSet::default(), |c, e| {
        if e.meets(c) {
            c
        } else {
            c.with(e.first().unwrap())
        }
    });
    best = best.min((greedy.len(), greedy));
    cover_search(edges, VertexSet::default(), VertexSet::default(), &mut best);
    best
}

fn cover_search(edges: &[VertexSet], chosen: VertexSet, banned: VertexSet, best: &mut (usize, VertexSet)) {
    let depth = chosen.len();
    // branch on the uncovered edge with fewest usable vertices; count a greedy
    // family of uncovered edges with disjoint usable parts as a lower bound
    let mut branch: Option<VertexSet> = None;
    let mut packed = VertexSet::default();
    let mut bound = 0;
    for &e in edges {
        if e.meets(chosen) {
            continue;
        }
        let avail = e.difference(banned);
        if avail.is_empty() {
            return;
        }
        if branch.is_none_or(|b| avail.len() < b.len()) {
            branch = Some(avail);
        }
        if avail.is_disjoint(packed) {
            packed = packed.union(avail);
            bound += 1;
        }
    }
    let Some(avail) = branch else {
        if depth < best.0 {
            *best = (depth, chosen);
        }
        return;
    };
    if depth + bound >= best.0 {
        return;
    }
    let mut banned = banned;
    for v in avail.iter() {
        cover_search(edges, chosen.with(v), banned, best);
        banned = banned.with(v);
    }
}

pub fn transversal_number(edges: &[VertexSet]) -> usize {
    min_transversal(edges).0
}

/// `π`: the largest number of pairwise disjoint edges (0 in the unit state).
pub fn packing_number(edges: &[VertexSet]) -> usize {
    if is_unit_state(edges) {
        return 0;
    }
    let mut best = 0;
    matching_search(edges, 0, VertexSet::default(), 0, &mut best);
    best
}

fn matching_search(edges: &[VertexSet], from: usize, used: VertexSet, count: usize, best: &mut usize) {
    *best = (*best).max(count);
    let open = edges[from..].iter().filter(|e| e.is_disjoint(used)).count();
    if count + open <= *best {
        return;
    }
    for i in from..edges.len() {
        if edges[i].is_disjoint(used) {
            matching_search(edges, i + 1, used.union(edges[i]), count + 1, best);
        }
    }
}

/// The first (in edge order) `k` pairwise disjoint edges, if any.
pub fn disjoint_edges(edges: &[VertexSet], k: usize) -> Option<Vec<VertexSet>> {
    fn go(edges: &[VertexSet], from: usize, used: VertexSet, k: usize, acc: &mut Vec<VertexSet>) -> bool {
        if acc.len() == k {
            return true;
        }
        for i in from..edges.len() {
            if edges.len() - i < k - acc.len() {
                return false;
            }
            if edges[i].is_disjoint(used) {
                acc.push(edges[i]);
                if go(edges, i + 1, used.union(edges[i]), k, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::with_capacity(k);
    go(edges, 0, VertexSet::default(), k, &mut acc).then_some(acc)
}

/// `τ = π` for the clutter; true in the unit and edgeless states.
pub fn konig_edges(edges: &[VertexSet]) -> bool {
    if edges.is_empty() || is_unit_state(edges) {
        return true;
    }
    disjoint_edges(edges, transversal_number(edges)).is_some()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KonigVerdict {
    pub konig: bool,
    pub height: usize,
    /// `height` pairwise coprime minimal generators, when they exist.
    pub witness: Option<Vec<Monomial>>,
}

/// Whether `I` has `ht(I)` pairwise coprime generators. The zero and unit
/// ideals are König with height 0 and an empty witness.
pub fn is_konig(ideal: &MonomialIdeal) -> Result<KonigVerdict> {
    if !ideal.is_square_free() {
        return Err(Error::Unsupported("König test needs a square-free ideal".into()));
    }
    let edges = ideal.supports();
    let height = transversal_number(&edges);
    let n = ideal.nvars();
    let witness = if ideal.is_zero() || ideal.is_unit() {
        Some(Vec::new())
    } else {
        disjoint_edges(&edges, height).map(|es| es.into_iter().map(|e| Monomial::from_support(n, e)).collect())
    };
    Ok(KonigVerdict {
        konig: witness.is_some(),
        height,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::VariableContext;

    fn ideal(n: usize, words: &[&str]) -> MonomialIdeal {
        MonomialIdeal::from_words(VariableContext::letters(n).unwrap(), words).unwrap()
    }

    #[test]
    fn q6_is_not_konig() {
        let i = ideal(6, &["abc", "aef", "cde", "bdf"]);
        let v = is_konig(&i).unwrap();
        assert_eq!((v.konig, v.height), (false, 2));
        assert_eq!(packing_number(&i.supports()), 1);
    }

    #[test]
    fn c4_is_konig() {
        let i = ideal(4, &["ab", "bc", "cd", "ad"]);
        let v = is_konig(&i).unwrap();
        assert!(v.konig);
        let w = v.witness.unwrap();
        assert_eq!(w.len(), 2);
        assert!(w[0].is_coprime(&w[1]));
    }

    #[test]
    fn small_cases() {
        let v = is_konig(&ideal(1, &["a"])).unwrap();
        assert!(v.konig && v.height == 1);
        let ctx = VariableContext::letters(3).unwrap();
        assert!(is_konig(&MonomialIdeal::zero(ctx.clone())).unwrap().konig);
        assert!(is_konig(&MonomialIdeal::unit(ctx)).unwrap().konig);
        assert!(konig_edges(&[VertexSet::default()]));
        assert_eq!(transversal_number(&[VertexSet::default()]), 0);
    }

    #[test]
    fn pentagon_numbers() {
        let i = ideal(5, &["ab", "bc", "cd", "de", "ae"]);
        let e = i.supports();
        assert_eq!(transversal_number(&e), 3);
        assert_eq!(packing_number(&e), 2);
        assert!(!konig_edges(&e));
        assert_eq!(transversal_number(&e), i.height().unwrap());
    }
}
