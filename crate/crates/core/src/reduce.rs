//! Reduction of an arc collection to a minimal subcollection whose nerve is
//! isomorphic to some `N(n', k')`.
//!
//! Removing a dominated vertex does not change the homotopy type of the nerve
//! or of its clique complex. Arcs contained in another arc are dropped first
//! by a sweep; the survivors' endpoints then live in a circular doubly-linked
//! list, and an opening immediately followed by another opening marks a
//! dominated arc. Once the list alternates, `k'` is read off the pattern.

use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use num_traits::ToPrimitive;

use crate::circle::{cyclic_ordered, Angle, ArcCollection, EndpointKind, EventKey};
use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// Which hypothesis of the domination lemma certifies a removal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LemmaCase {
    /// `U_i ⊆ U_j`.
    A,
    /// `U_i ⪯ U_j` and no closing endpoint in `[a_i, a_j]`.
    B,
    /// `U_j ⪯ U_i` and no opening endpoint in `(b_j, b_i]`.
    C,
}

impl fmt::Display for LemmaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LemmaCase::A => "a",
            LemmaCase::B => "b",
            LemmaCase::C => "c",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Removal {
    pub removed: usize,
    pub dominating: usize,
    pub case: LemmaCase,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ReductionStats {
    /// Building and sorting the endpoint events.
    pub sort_time: Duration,
    /// Containment sweep, worklist and classification.
    pub post_sort_time: Duration,
    /// Event deletions plus worklist insertions after sorting.
    pub mutations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    /// Original indices of the surviving arcs in cyclic start order.
    pub kept_indices: Vec<usize>,
    pub n_prime: usize,
    pub k_prime: usize,
    pub removal_log: Vec<Removal>,
    pub stats: ReductionStats,
}

/// Positions of the perturbed events of the arcs in `present`.
struct EventOrder {
    /// Sorted events.
    events: Vec<EventKey>,
    /// `slot[i] = (opening slot, closing slot)` for present arcs.
    slot: Vec<Option<(usize, usize)>>,
}

impl EventOrder {
    fn new(collection: &ArcCollection, present: &[usize]) -> Result<Self> {
        let events = collection.sorted_events(present)?;
        let mut slot = vec![None; collection.len()];
        for (p, e) in events.iter().enumerate() {
            let s: &mut (usize, usize) = slot[e.index].get_or_insert((0, 0));
            match e.kind {
                EndpointKind::Opening => s.0 = p,
                EndpointKind::Closing => s.1 = p,
            }
        }
        Ok(EventOrder { events, slot })
    }

    fn opening(&self, i: usize) -> usize {
        self.slot[i].expect("arc present").0
    }

    fn closing(&self, i: usize) -> usize {
        self.slot[i].expect("arc present").1
    }

    /// Events strictly between slots `from` and `to`, clockwise.
    fn between(&self, from: usize, to: usize) -> impl Iterator<Item = &EventKey> {
        let n = self.events.len();
        let len = (to + n - from) % n;
        (1..len).map(move |t| &self.events[(from + t) % n])
    }
}

fn check_index(collection: &ArcCollection, i: usize) -> Result<()> {
    collection.arc(i).map(|_| ())
}

/// The first case of the domination lemma under which arc `i` is dominated
/// by arc `j`, taking every arc of the collection into account.
pub fn domination_case(
    collection: &ArcCollection,
    i: usize,
    j: usize,
) -> Result<Option<LemmaCase>> {
    let all: Vec<usize> = (0..collection.len()).collect();
    domination_case_within(collection, &all, i, j)
}

/// As [`domination_case`], restricted to the subcollection `present`.
pub fn domination_case_within(
    collection: &ArcCollection,
    present: &[usize],
    i: usize,
    j: usize,
) -> Result<Option<LemmaCase>> {
    check_pair(collection, present, i, j)?;
    let order = EventOrder::new(collection, present)?;
    for case in [LemmaCase::A, LemmaCase::B, LemmaCase::C] {
        if case_holds(collection, &order, i, j, case)? {
            return Ok(Some(case));
        }
    }
    Ok(None)
}

/// Whether the given case certifies that `i` is dominated by `j` within
/// `present`.
pub fn domination_holds(
    collection: &ArcCollection,
    present: &[usize],
    i: usize,
    j: usize,
    case: LemmaCase,
) -> Result<bool> {
    check_pair(collection, present, i, j)?;
    let order = EventOrder::new(collection, present)?;
    case_holds(collection, &order, i, j, case)
}

fn check_pair(collection: &ArcCollection, present: &[usize], i: usize, j: usize) -> Result<()> {
    check_index(collection, i)?;
    check_index(collection, j)?;
    if i == j {
        return Err(Error::Precondition(format!("arc {i} compared with itself")));
    }
    for v in [i, j] {
        if !present.contains(&v) {
            return Err(Error::Precondition(format!(
                "arc {v} is not in the subcollection"
            )));
        }
    }
    Ok(())
}

fn case_holds(
    collection: &ArcCollection,
    order: &EventOrder,
    i: usize,
    j: usize,
    case: LemmaCase,
) -> Result<bool> {
    if case != LemmaCase::A && (collection.arc(i)?.is_whole() || collection.arc(j)?.is_whole()) {
        // The event order sees a whole arc as a point at 0.
        return Ok(false);
    }
    let (ai, bi, aj, bj) = (
        order.opening(i),
        order.closing(i),
        order.opening(j),
        order.closing(j),
    );
    Ok(match case {
        LemmaCase::A => collection.arc(i)?.is_subset_of(collection.arc(j)?),
        LemmaCase::B => {
            cyclic_ordered(&[ai, aj, bi, bj], true)?
                && order
                    .between(ai, aj)
                    .all(|e| e.kind != EndpointKind::Closing)
        }
        LemmaCase::C => {
            cyclic_ordered(&[aj, ai, bj, bi], true)?
                && order
                    .between(bj, bi)
                    .all(|e| e.kind != EndpointKind::Opening)
        }
    })
}

/// Drops every arc contained in another one. Among equal arcs the lowest
/// index survives; a whole-circle arc absorbs everything.
pub fn remove_contained(collection: &ArcCollection) -> Vec<usize> {
    let sorted = all_events_sorted(collection);
    let (kept, _) = containment_sweep(collection, &sorted);
    kept
}

/// Sorted events as parallel arrays.
struct SortedEvents {
    index: Vec<usize>,
    opening: Vec<bool>,
    positions: Positions,
}

/// Event positions in sorted order: 64-bit fractions when every endpoint
/// fits, exact angles otherwise.
enum Positions {
    Small(Vec<(u64, u64)>),
    Big(Vec<Angle>),
}

impl SortedEvents {
    fn len(&self) -> usize {
        self.index.len()
    }

    /// Whether events `p` and `q` sit at the same point. Fractions are kept
    /// reduced, so equal values have equal parts.
    fn same_position(&self, p: usize, q: usize) -> bool {
        match &self.positions {
            Positions::Small(v) => v[p] == v[q],
            Positions::Big(v) => {
                let (a, b) = (v[p].value(), v[q].value());
                a.numer() == b.numer() && a.denom() == b.denom()
            }
        }
    }
}

fn small_fraction(a: &Angle) -> Option<(u64, u64)> {
    Some((a.value().numer().to_u64()?, a.value().denom().to_u64()?))
}

/// Sorts all `2n` endpoint events in the order of [`EventKey`].
fn all_events_sorted(collection: &ArcCollection) -> SortedEvents {
    let n = collection.len();
    let mut compact = Vec::with_capacity(2 * n);
    for (i, arc) in collection.iter().enumerate() {
        match (small_fraction(arc.start()), small_fraction(&arc.end())) {
            (Some(s), Some(e)) => {
                compact.push((s, EndpointKind::Opening, i));
                compact.push((e, EndpointKind::Closing, i));
            }
            _ => {
                compact.clear();
                break;
            }
        }
    }
    if compact.len() == 2 * n {
        // One 128-bit cross product per comparison.
        compact.sort_unstable_by(|(a, ka, ia), (b, kb, ib)| {
            (a.0 as u128 * b.1 as u128)
                .cmp(&(b.0 as u128 * a.1 as u128))
                .then(ka.cmp(kb))
                .then(ia.cmp(ib))
        });
        return SortedEvents {
            index: compact.iter().map(|e| e.2).collect(),
            opening: compact
                .iter()
                .map(|e| e.1 == EndpointKind::Opening)
                .collect(),
            positions: Positions::Small(compact.into_iter().map(|e| e.0).collect()),
        };
    }
    let all: Vec<usize> = (0..n).collect();
    let events = collection.sorted_events(&all).expect("indices in range");
    SortedEvents {
        index: events.iter().map(|e| e.index).collect(),
        opening: events
            .iter()
            .map(|e| e.kind == EndpointKind::Opening)
            .collect(),
        positions: Positions::Big(events.into_iter().map(|e| e.position).collect()),
    }
}

/// Returns the survivors in index order and, for each removed arc, a
/// surviving arc containing it (`u32::MAX` for survivors).
fn containment_sweep(collection: &ArcCollection, sorted: &SortedEvents) -> (Vec<usize>, Vec<u32>) {
    const NONE: u32 = u32::MAX;
    let n = collection.len();
    assert!(n < NONE as usize, "at most 2^32 - 1 arcs");
    let mut witness = vec![NONE; n];
    if let Some(w) = collection.iter().position(|a| a.is_whole()) {
        for (i, slot) in witness.iter_mut().enumerate() {
            if i != w {
                *slot = w as u32;
            }
        }
        return (vec![w], witness);
    }

    // Integer ranks of the distinct positions. Everything below is indexed
    // by position in opening order, so the sweep reads memory in sequence;
    // 32-bit entries keep the randomly accessed arrays small.
    let mut end_by_arc = vec![0u32; n];
    let mut order: Vec<u32> = Vec::with_capacity(n);
    let mut start: Vec<u32> = Vec::with_capacity(n);
    let mut rank = u32::MAX;
    for p in 0..sorted.len() {
        if p == 0 || !sorted.same_position(p - 1, p) {
            rank = rank.wrapping_add(1);
        }
        if sorted.opening[p] {
            order.push(sorted.index[p] as u32);
            start.push(rank);
        } else {
            end_by_arc[sorted.index[p]] = rank;
        }
    }
    let period = rank as i64 + 1;
    // Lift to a real interval [start, end] with end >= start.
    let end: Vec<i64> = order
        .iter()
        .zip(&start)
        .map(|(&i, &s)| {
            let e = end_by_arc[i as usize];
            if e < s {
                e as i64 + period
            } else {
                e as i64
            }
        })
        .collect();
    drop(end_by_arc);

    // Sweep the lifted intervals shifted by -period, then unshifted, in start
    // order. An interval is contained in another iff an earlier interval (or
    // a better one with the same start) reaches at least as far.
    let mut owner = vec![NONE; n];
    let mut best_end = i64::MIN;
    let mut best = NONE;
    for shift in [-period, 0] {
        let mut g = 0;
        while g < n {
            let mut h = g;
            // Group of equal starts; the longest, lowest index leads.
            let mut lead = g;
            while h < n && start[h] == start[g] {
                if end[h] > end[lead] || (end[h] == end[lead] && order[h] < order[lead]) {
                    lead = h;
                }
                h += 1;
            }
            if shift == 0 {
                for t in g..h {
                    if best_end >= end[t] && best as usize != t {
                        owner[t] = best;
                    } else if t != lead {
                        owner[t] = lead as u32;
                    }
                }
            }
            if end[lead] + shift > best_end {
                best_end = end[lead] + shift;
                best = lead as u32;
            }
            g = h;
        }
    }

    // Point witnesses at survivors; containment is transitive.
    let mut chain = vec![];
    for t in 0..n {
        let mut w = owner[t];
        if w == NONE {
            continue;
        }
        while owner[w as usize] != NONE {
            chain.push(w);
            w = owner[w as usize];
        }
        owner[t] = w;
        for c in chain.drain(..) {
            owner[c as usize] = w;
        }
    }
    for t in 0..n {
        if owner[t] != NONE {
            witness[order[t] as usize] = order[owner[t] as usize];
        }
    }
    let kept = (0..n).filter(|&i| witness[i] == NONE).collect();
    (kept, witness)
}

/// Reduces the collection to a minimal subcollection and classifies its
/// nerve as `N(n', k')`.
pub fn reduce_to_minimal(collection: &ArcCollection) -> Result<ReductionResult> {
    if collection.is_empty() {
        return Err(Error::EmptyCollection);
    }
    let n = collection.len();
    let t0 = Instant::now();
    let sorted = all_events_sorted(collection);
    let sort_time = t0.elapsed();

    let t1 = Instant::now();
    let (kept, witness) = containment_sweep(collection, &sorted);
    let mut removal_log: Vec<Removal> = Vec::with_capacity(n - kept.len());
    removal_log.extend(
        witness
            .iter()
            .enumerate()
            .filter(|(_, &w)| w != u32::MAX)
            .map(|(i, &w)| Removal {
                removed: i,
                dominating: w as usize,
                case: LemmaCase::A,
            }),
    );
    if collection.arc(kept[0])?.is_whole() {
        return Ok(ReductionResult {
            kept_indices: kept,
            n_prime: 1,
            k_prime: 0,
            removal_log,
            stats: ReductionStats {
                sort_time,
                post_sort_time: t1.elapsed(),
                mutations: 0,
            },
        });
    }

    // Circular doubly-linked list over the surviving events, addressed by
    // position `t` among them; `partner[t]` is the other endpoint of the arc.
    let arc_of: Vec<usize> = sorted
        .index
        .iter()
        .copied()
        .filter(|&i| witness[i] == u32::MAX)
        .collect();
    let opening: Vec<bool> = (0..sorted.len())
        .filter(|&p| witness[sorted.index[p]] == u32::MAX)
        .map(|p| sorted.opening[p])
        .collect();
    let m = arc_of.len();
    let mut partner = vec![0usize; m];
    {
        let mut first_seen = witness;
        for t in 0..m {
            let slot = &mut first_seen[arc_of[t]];
            if *slot == u32::MAX {
                *slot = t as u32;
            } else {
                partner[t] = *slot as usize;
                partner[*slot as usize] = t;
            }
        }
    }
    let mut next: Vec<usize> = (0..m).map(|t| (t + 1) % m).collect();
    let mut prev: Vec<usize> = (0..m).map(|t| (t + m - 1) % m).collect();

    let mut mutations = 0usize;
    let mut in_stack = vec![false; m];
    let mut stack: Vec<usize> = (0..m)
        .rev()
        .filter(|&t| opening[t] && opening[next[t]])
        .collect();
    for &t in &stack {
        in_stack[t] = true;
    }
    mutations += stack.len();
    // Indexed by opening position.
    let mut removed = vec![false; m];
    fn unlink(t: usize, next: &mut [usize], prev: &mut [usize]) {
        let (a, b) = (prev[t], next[t]);
        next[a] = b;
        prev[b] = a;
    }
    while let Some(t) = stack.pop() {
        in_stack[t] = false;
        let q = next[t];
        if removed[t] || !opening[q] || q == t {
            continue;
        }
        removed[t] = true;
        removal_log.push(Removal {
            removed: arc_of[t],
            dominating: arc_of[q],
            case: LemmaCase::B,
        });
        unlink(t, &mut next, &mut prev);
        let c = partner[t];
        let (before, after) = (prev[c], next[c]);
        unlink(c, &mut next, &mut prev);
        mutations += 2;
        if opening[before] && opening[after] && !in_stack[before] {
            stack.push(before);
            in_stack[before] = true;
            mutations += 1;
        }
    }
    if mutations > 8 * n {
        return Err(Error::Precondition(format!(
            "event list mutations {mutations} exceed 8n = {}",
            8 * n
        )));
    }

    // Survivors in cyclic start order from the first opening event.
    let first = (0..m)
        .find(|&t| opening[t] && !removed[t])
        .expect("at least one survivor");
    let mut kept_indices = vec![];
    let mut kept_openings = vec![];
    let mut label = vec![usize::MAX; m];
    let mut t = first;
    loop {
        if opening[t] {
            label[t] = kept_indices.len();
            kept_indices.push(arc_of[t]);
            kept_openings.push(t);
        }
        t = next[t];
        if t == first {
            break;
        }
    }
    let n_prime = kept_indices.len();
    let mut k_prime = None;
    for (s, &t) in kept_openings.iter().enumerate() {
        let q = next[t];
        if opening[q] {
            return Err(Error::Precondition(format!(
                "event list does not alternate after arc {}",
                arc_of[t]
            )));
        }
        let k = (s + n_prime - label[partner[q]]) % n_prime;
        match k_prime {
            None => k_prime = Some(k),
            Some(k0) if k0 != k => {
                return Err(Error::Precondition(format!(
                    "inconsistent offset: {k0} at the first survivor, {k} at arc {}",
                    arc_of[t]
                )))
            }
            _ => {}
        }
    }
    Ok(ReductionResult {
        kept_indices,
        n_prime,
        k_prime: k_prime.unwrap_or(0),
        removal_log,
        stats: ReductionStats {
            sort_time,
            post_sort_time: t1.elapsed(),
            mutations,
        },
    })
}

/// Replays the removal log, rechecking every domination claim against the
/// subcollection present at that point, then checks the survivors alternate
/// and classify as `(n', k')`.
///
/// Returns `Ok(false)` for a claim that does not hold and an error when the
/// log does not even fit the collection.
pub fn verify_reduction(collection: &ArcCollection, result: &ReductionResult) -> Result<bool> {
    let n = collection.len();
    let mut present = vec![true; n];
    for r in &result.removal_log {
        for v in [r.removed, r.dominating] {
            if v >= n {
                return Err(Error::InconsistentLog(format!("index {v} out of range")));
            }
        }
        if !present[r.removed] {
            return Err(Error::InconsistentLog(format!(
                "arc {} removed twice",
                r.removed
            )));
        }
        if r.removed == r.dominating || !present[r.dominating] {
            return Ok(false);
        }
        let current: Vec<usize> = (0..n).filter(|&v| present[v]).collect();
        if !domination_holds(collection, &current, r.removed, r.dominating, r.case)? {
            return Ok(false);
        }
        present[r.removed] = false;
    }
    let survivors: HashSet<usize> = (0..n).filter(|&v| present[v]).collect();
    let kept: HashSet<usize> = result.kept_indices.iter().copied().collect();
    if kept.len() != result.kept_indices.len() || survivors != kept {
        return Err(Error::InconsistentLog(
            "kept indices do not match the survivors of the log".into(),
        ));
    }
    if result.n_prime != kept.len() || result.k_prime >= result.n_prime.max(1) {
        return Ok(false);
    }
    if result.kept_indices.len() == 1 {
        return Ok(result.k_prime == 0);
    }
    Ok(classify_alternating(collection, &result.kept_indices)? == Some(result.k_prime))
}

/// For arcs listed in cyclic start order whose perturbed events alternate,
/// the offset `k` with `a_s` immediately followed by `b_{s-k}`.
pub fn classify_alternating(collection: &ArcCollection, kept: &[usize]) -> Result<Option<usize>> {
    let m = kept.len();
    if collection.arc(kept[0])?.is_whole() {
        return Ok((m == 1).then_some(0));
    }
    let order = EventOrder::new(collection, kept)?;
    let mut label = vec![usize::MAX; collection.len()];
    for (s, &i) in kept.iter().enumerate() {
        label[i] = s;
    }
    // Openings must appear in the listed cyclic order.
    let openings: Vec<usize> = kept.iter().map(|&i| order.opening(i)).collect();
    if m >= 2 && !cyclic_ordered(&openings, true)? {
        return Ok(None);
    }
    let len = order.events.len();
    let mut k = None;
    for (t, e) in order.events.iter().enumerate() {
        let f = &order.events[(t + 1) % len];
        if e.kind == f.kind {
            return Ok(None);
        }
        if e.kind == EndpointKind::Opening {
            let offset = (label[e.index] + m - label[f.index]) % m;
            if k.is_some_and(|k0| k0 != offset) {
                return Ok(None);
            }
            k = Some(offset);
        }
    }
    Ok(k)
}

/// The nerve as seen by the perturbed event order: each arc becomes the run
/// of event slots from its opening to its closing.
pub fn perturbed_nerve(collection: &ArcCollection) -> Result<SimplicialComplex> {
    let n = collection.len();
    if collection.iter().any(|a| a.is_whole()) {
        // Whole arcs are not perturbed: they cover every slot.
        return Ok(crate::complex::nerve(collection));
    }
    let all: Vec<usize> = (0..n).collect();
    let order = EventOrder::new(collection, &all)?;
    let len = order.events.len();
    let covers = |j: usize, slot: usize| {
        let (a, b) = (order.opening(j), order.closing(j));
        (slot + len - a) % len <= (b + len - a) % len
    };
    let sets = (0..n).map(|i| {
        let a = order.opening(i);
        Simplex::new((0..n).filter(|&j| covers(j, a))).expect("contains i")
    });
    SimplicialComplex::from_simplices(n, sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::{evenly_spaced, parse_rational, Angle, Arc};
    use crate::complex::{nerve, nerve_nk};
    use proptest::prelude::*;

    fn arc(s: &str, len: &str) -> Arc {
        Arc::new(
            Angle::new(parse_rational(s).unwrap()),
            parse_rational(len).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn event_sort_mixes_word_and_big_fractions() {
        let big = "1/36893488147419103232"; // 2^-65
        let c = ArcCollection::new(vec![
            arc(big, "1/2"),
            arc("0", "1/3"),
            arc("1/2", big),
            arc("1/2", "0"),
            arc("18446744073709551615/18446744073709551616", "1/4"),
        ])
        .unwrap();
        let check = |c: &ArcCollection| {
            let all: Vec<usize> = (0..c.len()).collect();
            let want = c.sorted_events(&all).unwrap();
            let got = all_events_sorted(c);
            assert_eq!(got.index, want.iter().map(|e| e.index).collect::<Vec<_>>());
            let kinds: Vec<bool> = want
                .iter()
                .map(|e| e.kind == EndpointKind::Opening)
                .collect();
            assert_eq!(got.opening, kinds);
        };
        check(&c);
        assert!(matches!(all_events_sorted(&c).positions, Positions::Big(_)));
        let small = ArcCollection::new(vec![
            arc("1/3", "1/3"),
            arc("2/3", "0"),
            arc("0", "2/3"),
            arc("1/2", "1/6"),
        ])
        .unwrap();
        check(&small);
        assert!(matches!(
            all_events_sorted(&small).positions,
            Positions::Small(_)
        ));
    }

    fn span(a: i64, b: i64, d: i64) -> Arc {
        Arc::from_endpoints(Angle::from_ratio(a, d), Angle::from_ratio(b, d))
    }

    /// Six arcs on a 48-point grid, 0-based.
    pub(crate) fn six_arcs() -> ArcCollection {
        ArcCollection::new(vec![
            span(2, 6, 48),
            span(0, 10, 48),
            span(8, 24, 48),
            span(18, 28, 48),
            span(22, 34, 48),
            span(32, 1, 48),
        ])
        .unwrap()
    }

    #[test]
    fn lemma_cases_on_six_arcs() {
        let u = six_arcs();
        assert_eq!(domination_case(&u, 0, 1).unwrap(), Some(LemmaCase::A));
        assert_eq!(domination_case(&u, 3, 4).unwrap(), Some(LemmaCase::B));
        assert!(domination_case(&u, 0, 0).is_err());
        assert!(domination_case(&u, 0, 6).is_err());
    }

    #[test]
    fn equal_arcs_are_case_a() {
        let u = ArcCollection::new(vec![arc("1/3", "1/4"), arc("1/3", "1/4")]).unwrap();
        assert_eq!(domination_case(&u, 0, 1).unwrap(), Some(LemmaCase::A));
        assert_eq!(domination_case(&u, 1, 0).unwrap(), Some(LemmaCase::A));
    }

    #[test]
    fn no_domination_in_evenly_spaced() {
        for n in 3..=8 {
            for k in 1..=n - 2 {
                let u = evenly_spaced(n, k).unwrap();
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            assert_eq!(domination_case(&u, i, j).unwrap(), None, "n={n} k={k}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn case_c_mirrors_case_b() {
        // Arc 1 ends just after arc 0 with no opening in between.
        let u =
            ArcCollection::new(vec![span(0, 10, 24), span(4, 12, 24), span(14, 20, 24)]).unwrap();
        assert_eq!(domination_case(&u, 1, 0).unwrap(), Some(LemmaCase::C));
        assert!(domination_holds(&u, &[0, 1, 2], 0, 1, LemmaCase::B).unwrap());
        assert!(!domination_holds(&u, &[0, 1, 2], 1, 2, LemmaCase::B).unwrap());
    }

    #[test]
    fn remove_contained_examples() {
        let u = ArcCollection::new(vec![
            arc("0", "1/3"),
            Arc::whole(),
            arc("1/2", "1/4"),
            Arc::whole(),
        ])
        .unwrap();
        assert_eq!(remove_contained(&u), vec![1]);
        for (n, k) in [(5, 2), (6, 3), (7, 0), (4, 3)] {
            assert_eq!(
                remove_contained(&evenly_spaced(n, k).unwrap()),
                (0..n).collect::<Vec<_>>()
            );
        }
        let nested =
            ArcCollection::new(vec![arc("1/8", "1/4"), arc("0", "1/2"), arc("1/4", "1/16")])
                .unwrap();
        assert_eq!(remove_contained(&nested), vec![1]);
        let equal = ArcCollection::new(vec![arc("1/5", "0"), arc("1/2", "1/3"), arc("1/2", "1/3")])
            .unwrap();
        assert_eq!(remove_contained(&equal), vec![0, 1]);
        // Wrapping container.
        let wrap = ArcCollection::new(vec![arc("0", "1/16"), arc("7/8", "1/4")]).unwrap();
        assert_eq!(remove_contained(&wrap), vec![1]);
    }

    fn brute_contained(u: &ArcCollection) -> Vec<usize> {
        (0..u.len())
            .filter(|&i| {
                !(0..u.len()).any(|j| {
                    j != i
                        && u.arcs()[i].is_subset_of(&u.arcs()[j])
                        && (!u.arcs()[j].is_subset_of(&u.arcs()[i]) || j < i)
                })
            })
            .collect()
    }

    #[test]
    fn reduces_six_arcs_to_a_square() {
        let u = six_arcs();
        let r = reduce_to_minimal(&u).unwrap();
        assert_eq!((r.n_prime, r.k_prime), (4, 1));
        assert_eq!(r.kept_indices, vec![1, 2, 4, 5]);
        assert_eq!(
            r.removal_log,
            vec![
                Removal {
                    removed: 0,
                    dominating: 1,
                    case: LemmaCase::A
                },
                Removal {
                    removed: 3,
                    dominating: 4,
                    case: LemmaCase::B
                },
            ]
        );
        assert!(verify_reduction(&u, &r).unwrap());
        let kept = u.select(&r.kept_indices).unwrap();
        assert_eq!(nerve(&kept).isomorphic_to_nk(), Some((4, 1)));
    }

    #[test]
    fn evenly_spaced_is_already_minimal() {
        for n in 1..=8 {
            for k in 0..n {
                let u = evenly_spaced(n, k).unwrap();
                let r = reduce_to_minimal(&u).unwrap();
                assert!(r.removal_log.is_empty(), "n={n} k={k}");
                assert_eq!((r.n_prime, r.k_prime), (n, k), "n={n} k={k}");
                assert_eq!(r.kept_indices, (0..n).collect::<Vec<_>>());
                assert!(verify_reduction(&u, &r).unwrap());
            }
        }
    }

    #[test]
    fn disjoint_arcs_and_singletons() {
        let u =
            ArcCollection::new(vec![arc("1/2", "1/8"), arc("0", "1/8"), arc("1/4", "0")]).unwrap();
        let r = reduce_to_minimal(&u).unwrap();
        assert_eq!((r.n_prime, r.k_prime), (3, 0));
        assert_eq!(r.kept_indices, vec![1, 2, 0]);
        let one = ArcCollection::new(vec![arc("1/3", "1/2")]).unwrap();
        let r = reduce_to_minimal(&one).unwrap();
        assert_eq!((r.n_prime, r.k_prime), (1, 0));
    }

    #[test]
    fn whole_circle_short_circuit() {
        let u = ArcCollection::new(vec![arc("0", "1/3"), arc("0", "2"), arc("1/2", "1")]).unwrap();
        let r = reduce_to_minimal(&u).unwrap();
        assert_eq!(r.kept_indices, vec![1]);
        assert_eq!((r.n_prime, r.k_prime), (1, 0));
        assert_eq!(r.removal_log.len(), 2);
        assert!(verify_reduction(&u, &r).unwrap());
    }

    #[test]
    fn fabricated_logs_are_rejected() {
        let u = evenly_spaced(6, 3).unwrap();
        let mut r = reduce_to_minimal(&u).unwrap();
        r.removal_log.push(Removal {
            removed: 0,
            dominating: 1,
            case: LemmaCase::B,
        });
        r.kept_indices.retain(|&i| i != 0);
        r.n_prime = 5;
        assert!(!verify_reduction(&u, &r).unwrap());

        let mut r = reduce_to_minimal(&u).unwrap();
        r.removal_log.push(Removal {
            removed: 9,
            dominating: 1,
            case: LemmaCase::A,
        });
        assert!(verify_reduction(&u, &r).is_err());

        let mut r = reduce_to_minimal(&u).unwrap();
        r.k_prime = 2;
        assert!(!verify_reduction(&u, &r).unwrap());
    }

    fn grid_collection() -> impl Strategy<Value = ArcCollection> {
        // Small denominators force coincident endpoints.
        prop::collection::vec((0i64..12, 0i64..14), 1..=9).prop_map(|v| {
            ArcCollection::new(
                v.into_iter()
                    .map(|(s, l)| {
                        Arc::new(
                            Angle::from_ratio(s, 12),
                            parse_rational(&format!("{l}/12")).unwrap(),
                        )
                        .unwrap()
                    })
                    .collect(),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn remove_contained_matches_pairwise(u in grid_collection()) {
            prop_assert_eq!(remove_contained(&u), brute_contained(&u));
        }

        #[test]
        fn perturbation_preserves_the_nerve(u in grid_collection()) {
            prop_assert_eq!(perturbed_nerve(&u).unwrap(), nerve(&u));
        }

        #[test]
        fn reductions_replay_and_stay_minimal(u in grid_collection()) {
            let r = reduce_to_minimal(&u).unwrap();
            prop_assert!(verify_reduction(&u, &r).unwrap());
            // Listed in cyclic start order, the survivors' nerve is N(n', k') verbatim.
            let kept = u.select(&r.kept_indices).unwrap();
            let k = nerve(&kept);
            prop_assert_eq!(&k, &nerve_nk(r.n_prime, r.k_prime));
            if r.k_prime + 1 < r.n_prime {
                for v in 0..r.n_prime {
                    prop_assert_eq!(k.dominated_vertex(v).unwrap(), None);
                }
            }
        }
    }
}
