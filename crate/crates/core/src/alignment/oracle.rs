use crate::alignment::{ScoringScheme, SeedContext, Sequence};
use crate::{Error, Result, Score};

/// Longest input the exhaustive recursion will accept.
pub const ORACLE_MAX_LEN: usize = 12;

/// Global score at `(Q, R)` by memo-free recursion over the three moves.
///
/// Exponential time; exists only to cross-check [`dp_fill`](super::dp_fill).
pub fn levenshtein_oracle(
    query: &Sequence,
    reference: &Sequence,
    scheme: ScoringScheme,
    seed: SeedContext,
) -> Result<Score> {
    for len in [query.len(), reference.len()] {
        if len > ORACLE_MAX_LEN {
            return Err(Error::OracleScaleExceeded { len, cap: ORACLE_MAX_LEN });
        }
    }
    Ok(distance(query, reference, query.len(), reference.len(), &scheme, &seed))
}

fn distance(
    q: &Sequence,
    r: &Sequence,
    i: usize,
    j: usize,
    scheme: &ScoringScheme,
    seed: &SeedContext,
) -> Score {
    if i == 0 {
        return seed.boundary(j, scheme);
    }
    if j == 0 {
        return seed.boundary(i, scheme);
    }
    let sub = distance(q, r, i - 1, j - 1, scheme, seed)
        + scheme.substitution(q.bases()[i - 1], r.bases()[j - 1]);
    let del = distance(q, r, i - 1, j, scheme, seed) + scheme.gap();
    let ins = distance(q, r, i, j - 1, scheme, seed) + scheme.gap();
    sub.min(del).min(ins)
}
