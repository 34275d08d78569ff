//! Projective equivalence of multi-arrangements.
//!
//! The search anchors on a general-position 4-tuple of base points of the
//! first arrangement and tries matching 4-tuples of the second, pruned by
//! point profiles (incident block/multiplicity multisets) and by join
//! consistency, then verifies the candidate projectivity on every line.

use std::collections::HashMap;

use crate::projgeom::{collinear, find_projectivity, ProjPoint, Projectivity};

use super::{BaseAnalysis, MultinetCandidate, MultinetError};

const LINE_CAP: usize = 30;

struct Side {
    lines: Vec<(usize, crate::multinet::MultiLine)>,
    analysis: BaseAnalysis,
    /// canonical line key -> (block, mult)
    line_map: HashMap<String, (usize, u32)>,
}

impl Side {
    fn build(c: &MultinetCandidate) -> Side {
        let lines: Vec<(usize, crate::multinet::MultiLine)> = c
            .flat_lines()
            .map(|(b, ml)| (b, ml.clone()))
            .collect();
        let analysis = c.analyze();
        let line_map = lines
            .iter()
            .map(|(b, ml)| (ml.line.canonical_key(), (*b, ml.mult)))
            .collect();
        Side {
            lines,
            analysis,
            line_map,
        }
    }

    /// Sorted (block, mult) profile of the lines through base point `p`,
    /// with blocks renamed through `perm`.
    fn profile(&self, p: usize, perm: &[usize]) -> (u64, Vec<(usize, u32)>) {
        let bp = &self.analysis.base[p];
        let mut prof: Vec<(usize, u32)> = bp
            .incident_lines
            .iter()
            .map(|&i| (perm[self.lines[i].0], self.lines[i].1.mult))
            .collect();
        prof.sort_unstable();
        (bp.n_p, prof)
    }

    /// The arrangement line through two base points, if any, as
    /// (block-through-perm, mult).
    fn join_type(&self, p: usize, q: usize, perm: &[usize]) -> Option<(usize, u32)> {
        let a = &self.analysis.base[p].incident_lines;
        let b = &self.analysis.base[q].incident_lines;
        for &i in a {
            if b.contains(&i) {
                return Some((perm[self.lines[i].0], self.lines[i].1.mult));
            }
        }
        None
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            rec(prefix, rest, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

/// Searches for a projectivity carrying the line multiset of `a` onto that
/// of `b`, respecting multiplicities and some permutation of the blocks.
/// Returns `None` when the arrangements are not equivalent.
pub fn projectively_equivalent(
    a: &MultinetCandidate,
    b: &MultinetCandidate,
) -> Result<Option<Projectivity>, MultinetError> {
    if a.line_count() > LINE_CAP || b.line_count() > LINE_CAP {
        return Err(MultinetError::TooLarge(a.line_count().max(b.line_count())));
    }
    if a.k() != b.k() || a.line_count() != b.line_count() {
        return Ok(None);
    }
    let conductor = u32::try_from(num_integer::lcm(
        a.conductor() as u64,
        b.conductor() as u64,
    ))
    .expect("conductor lcm");
    let a = a.lift_to(conductor)?;
    let b = b.lift_to(conductor)?;
    let sa = Side::build(&a);
    let sb = Side::build(&b);
    if sa.analysis.d != sb.analysis.d || sa.analysis.base.len() != sb.analysis.base.len() {
        return Ok(None);
    }
    let identity: Vec<usize> = (0..b.k()).collect();

    for perm in permutations(a.k()) {
        // block weight multisets must agree under the permutation
        let weights = |c: &MultinetCandidate, i: usize| -> Vec<u32> {
            let mut w: Vec<u32> = c.blocks()[i].iter().map(|ml| ml.mult).collect();
            w.sort_unstable();
            w
        };
        if (0..a.k()).any(|i| weights(&a, i) != weights(&b, perm[i])) {
            continue;
        }

        // profile table for b, and source points ordered rarest-first
        let mut freq: HashMap<(u64, Vec<(usize, u32)>), Vec<usize>> = HashMap::new();
        for q in 0..sb.analysis.base.len() {
            freq.entry(sb.profile(q, &identity)).or_default().push(q);
        }
        let mut src_order: Vec<usize> = (0..sa.analysis.base.len()).collect();
        src_order.sort_by_key(|&p| {
            freq.get(&sa.profile(p, &perm))
                .map(|v| v.len())
                .unwrap_or(0)
        });
        if src_order
            .iter()
            .any(|&p| !freq.contains_key(&sa.profile(p, &perm)))
        {
            continue;
        }

        let src = match general_position_tuple(&sa, &src_order) {
            Some(t) => t,
            None => continue,
        };
        if let Some(t) = search(&sa, &sb, &src, &perm, &freq)? {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// First 4-tuple, in the given preference order, with no three collinear.
fn general_position_tuple(side: &Side, order: &[usize]) -> Option<[usize; 4]> {
    let pts = &side.analysis.base;
    let n = order.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let (pa, pb, pc) = (order[a], order[b], order[c]);
                if collinear([&pts[pa].point, &pts[pb].point, &pts[pc].point]).ok()? {
                    continue;
                }
                for d in c + 1..n {
                    let pd = order[d];
                    let ok = !collinear([&pts[pa].point, &pts[pb].point, &pts[pd].point]).ok()?
                        && !collinear([&pts[pa].point, &pts[pc].point, &pts[pd].point]).ok()?
                        && !collinear([&pts[pb].point, &pts[pc].point, &pts[pd].point]).ok()?;
                    if ok {
                        return Some([pa, pb, pc, pd]);
                    }
                }
            }
        }
    }
    None
}

fn search(
    sa: &Side,
    sb: &Side,
    src: &[usize; 4],
    perm: &[usize],
    freq: &HashMap<(u64, Vec<(usize, u32)>), Vec<usize>>,
) -> Result<Option<Projectivity>, MultinetError> {
    let identity: Vec<usize> = (0..perm.len()).collect();
    let src_pts: Vec<&ProjPoint> = src
        .iter()
        .map(|&p| &sa.analysis.base[p].point)
        .collect();
    let mut chosen: Vec<usize> = Vec::with_capacity(4);

    fn dfs(
        sa: &Side,
        sb: &Side,
        src: &[usize; 4],
        src_pts: &[&ProjPoint],
        perm: &[usize],
        identity: &[usize],
        freq: &HashMap<(u64, Vec<(usize, u32)>), Vec<usize>>,
        chosen: &mut Vec<usize>,
    ) -> Result<Option<Projectivity>, MultinetError> {
        let t = chosen.len();
        if t == 4 {
            let dst_pts: Vec<&ProjPoint> =
                chosen.iter().map(|&q| &sb.analysis.base[q].point).collect();
            let proj = match find_projectivity(
                [src_pts[0], src_pts[1], src_pts[2], src_pts[3]],
                [dst_pts[0], dst_pts[1], dst_pts[2], dst_pts[3]],
            ) {
                Ok(p) => p,
                Err(_) => return Ok(None),
            };
            if verify_line_map(sa, sb, &proj, perm) {
                return Ok(Some(proj));
            }
            return Ok(None);
        }
        let want = sa.profile(src[t], perm);
        let candidates = match freq.get(&want) {
            Some(c) => c,
            None => return Ok(None),
        };
        'cand: for &q in candidates {
            if chosen.contains(&q) {
                continue;
            }
            for s in 0..t {
                if sa.join_type(src[s], src[t], perm) != sb.join_type(chosen[s], q, identity) {
                    continue 'cand;
                }
            }
            // keep the target tuple in general position as it grows
            for s in 0..t {
                for u in s + 1..t {
                    let tri = [
                        &sb.analysis.base[chosen[s]].point,
                        &sb.analysis.base[chosen[u]].point,
                        &sb.analysis.base[q].point,
                    ];
                    if collinear(tri).unwrap_or(true) {
                        continue 'cand;
                    }
                }
            }
            chosen.push(q);
            if let Some(found) = dfs(sa, sb, src, src_pts, perm, identity, freq, chosen)? {
                return Ok(Some(found));
            }
            chosen.pop();
        }
        Ok(None)
    }

    dfs(sa, sb, src, &src_pts, perm, &identity, freq, &mut chosen)
}

fn verify_line_map(sa: &Side, sb: &Side, t: &Projectivity, perm: &[usize]) -> bool {
    for (block, ml) in &sa.lines {
        let image = t.apply_line(&ml.line);
        match sb.line_map.get(&image.canonical_key()) {
            Some(&(bb, bm)) if bb == perm[*block] && bm == ml.mult => {}
            _ => return false,
        }
    }
    true
}
