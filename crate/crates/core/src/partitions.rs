//! Integer-partition combinatorics underlying block labels: conjugation,
//! p-cores and p-weights via the abacus, triangular 2-cores, and p-bar
//! cores for the spin block labels at odd p.

use std::fmt;

/// A partition: weakly decreasing positive parts. The derived `Ord` is
/// lexicographic on the part list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&x| x > 0),
            "parts must be weakly decreasing and positive"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        let rows = self.parts.len() as u32;
        if rows == 0 {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&x| x >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// First-column hook lengths: the beta set `{λ_i + (k - 1 - i)}` on `k`
    /// beads, descending.
    fn beta_set(&self) -> Vec<u32> {
        let k = self.parts.len() as u32;
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &x)| x + k - 1 - i as u32)
            .collect()
    }

    fn from_beta_set(mut betas: Vec<u32>) -> Partition {
        betas.sort_unstable_by(|a, b| b.cmp(a));
        let k = betas.len() as u32;
        let parts: Vec<u32> = betas
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (k - 1 - i as u32))
            .take_while(|&x| x > 0)
            .collect();
        Partition { parts }
    }

    /// The p-core: the unique partition left after removing all rim p-hooks.
    /// Computed on the abacus, where hook removal moves a bead down its
    /// runner; the result is removal-order independent by construction.
    pub fn p_core(&self, p: u32) -> Partition {
        assert!(p >= 2);
        let betas = self.beta_set();
        let mut per_runner = vec![0u32; p as usize];
        for &b in &betas {
            per_runner[(b % p) as usize] += 1;
        }
        let mut core_betas = Vec::with_capacity(betas.len());
        for (r, &count) in per_runner.iter().enumerate() {
            for j in 0..count {
                core_betas.push(r as u32 + j * p);
            }
        }
        Partition::from_beta_set(core_betas)
    }

    /// Number of rim p-hooks removed on the way to the p-core.
    pub fn p_weight(&self, p: u32) -> u32 {
        (self.size() - self.p_core(p).size()) / p
    }

    /// True for staircase partitions `(k, k-1, …, 1)`, the exact shape of
    /// 2-cores.
    pub fn is_two_core(&self) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &x)| x == (self.parts.len() - i) as u32)
    }

    /// All single rim p-hook removals, as the resulting partitions.
    ///
    /// A removable rim p-hook is a connected border strip of p cells; the
    /// strip covering rows `a..=b` forces every intermediate row down to one
    /// cell less than the row below it, which pins the removal to a choice
    /// of row interval.
    pub fn rim_hook_removals(&self, p: u32) -> Vec<Partition> {
        let k = self.parts.len();
        let mut results = Vec::new();
        for a in 0..k {
            for b in a..k {
                // Rows a..b each drop to one less than the row below; the
                // cells removed there leave p - removed for row b itself.
                let mut parts = self.parts.clone();
                let mut removed = 0u32;
                for i in a..b {
                    let new = self.parts[i + 1] - 1;
                    removed += self.parts[i] - new;
                    parts[i] = new;
                }
                if removed >= p {
                    break;
                }
                let take_from_last = (p - removed) as i64;
                let last = self.parts[b] as i64 - take_from_last;
                let below = if b + 1 < k { self.parts[b + 1] as i64 } else { 0 };
                if last < below {
                    continue;
                }
                parts[b] = last as u32;
                let parts: Vec<u32> = parts.into_iter().filter(|&x| x > 0).collect();
                debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
                let mu = Partition { parts };
                debug_assert_eq!(self.size() - mu.size(), p);
                results.push(mu);
            }
        }
        results.sort_unstable();
        results.dedup();
        results
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All partitions of `m`, in descending lexicographic order.
pub fn all_partitions(m: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m.max(1), &mut Vec::new(), &mut out);
    out
}

/// All p-cores of size `m`, ascending lexicographically.
pub fn enumerate_p_cores(m: u32, p: u32) -> Vec<Partition> {
    let mut cores: Vec<Partition> = all_partitions(m)
        .into_iter()
        .filter(|lam| lam.p_core(p) == *lam)
        .collect();
    cores.sort_unstable();
    cores
}

/// A bar partition: strictly decreasing positive parts (2-regular), the
/// label shape for spin blocks.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BarPartition {
    parts: Vec<u32>,
}

impl BarPartition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] > w[1]) && parts.iter().all(|&x| x > 0),
            "parts must be strictly decreasing and positive"
        );
        BarPartition { parts }
    }

    pub fn empty() -> Self {
        BarPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// All single p-bar removals. The three moves: drop a part equal to p;
    /// lower a part by p when the result is positive and not already a
    /// part; drop two parts summing to p.
    pub fn bar_removals(&self, p: u32) -> Vec<BarPartition> {
        assert!(p >= 3 && p % 2 == 1, "bars are an odd-p notion");
        let mut results = Vec::new();
        let k = self.parts.len();
        for i in 0..k {
            let a = self.parts[i];
            if a == p {
                let mut parts = self.parts.clone();
                parts.remove(i);
                results.push(BarPartition { parts });
            }
            if a > p && !self.parts.contains(&(a - p)) {
                let mut parts = self.parts.clone();
                parts[i] = a - p;
                parts.sort_unstable_by(|x, y| y.cmp(x));
                results.push(BarPartition { parts });
            }
            for j in i + 1..k {
                if a + self.parts[j] == p {
                    let mut parts = self.parts.clone();
                    parts.remove(j);
                    parts.remove(i);
                    results.push(BarPartition { parts });
                }
            }
        }
        results.sort_unstable();
        results.dedup();
        results
    }

    /// The p-bar core: exhaustive bar removal, taking the first applicable
    /// move at each step. Order independence is a checked property, not an
    /// assumption of this routine.
    pub fn p_bar_core(&self, p: u32) -> BarPartition {
        let mut current = self.clone();
        loop {
            let removals = current.bar_removals(p);
            match removals.into_iter().next() {
                Some(next) => current = next,
                None => return current,
            }
        }
    }

    pub fn p_bar_weight(&self, p: u32) -> u32 {
        (self.size() - self.p_bar_core(p).size()) / p
    }
}

impl fmt::Display for BarPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for BarPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All bar partitions (strict partitions) of `m`, ascending.
pub fn all_bar_partitions(m: u32) -> Vec<BarPartition> {
    let mut out: Vec<BarPartition> = all_partitions(m)
        .into_iter()
        .filter(|lam| lam.parts().windows(2).all(|w| w[0] > w[1]))
        .map(|lam| BarPartition {
            parts: lam.parts().to_vec(),
        })
        .collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    /// Literal rim-hook removal oracle: explore every removal order and
    /// collect all terminal partitions.
    fn literal_cores(lam: &Partition, prime: u32) -> BTreeSet<Partition> {
        let removals = lam.rim_hook_removals(prime);
        if removals.is_empty() {
            return BTreeSet::from([lam.clone()]);
        }
        removals
            .iter()
            .flat_map(|mu| literal_cores(mu, prime))
            .collect()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[5, 1]).conjugate(), p(&[2, 1, 1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        // Staircases are self-conjugate.
        assert_eq!(p(&[3, 2, 1]).conjugate(), p(&[3, 2, 1]));
    }

    #[test]
    fn conjugate_is_an_involution() {
        for lam in all_partitions(9) {
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }

    #[test]
    fn two_core_examples() {
        assert_eq!(p(&[4, 2]).p_core(2), Partition::empty());
        assert_eq!(p(&[4, 2]).p_weight(2), 3);
        assert_eq!(p(&[2, 1]).p_core(2), p(&[2, 1]));
        // Too small to contain a hook of length p.
        assert_eq!(p(&[2]).p_core(3), p(&[2]));
        assert_eq!(p(&[3, 2, 1]).p_weight(2), 0);
        assert_eq!(p(&[3]).p_core(3), Partition::empty());
        assert_eq!(p(&[3]).p_weight(3), 1);
    }

    #[test]
    fn abacus_core_agrees_with_literal_removal() {
        for m in 0..=11 {
            for lam in all_partitions(m) {
                for prime in [2, 3, 5] {
                    let cores = literal_cores(&lam, prime);
                    assert_eq!(cores.len(), 1, "order dependence at {lam} p={prime}");
                    let core = cores.into_iter().next().unwrap();
                    assert_eq!(lam.p_core(prime), core, "core of {lam} at p={prime}");
                }
            }
        }
    }

    #[test]
    fn core_is_idempotent_and_size_congruent() {
        for m in 0..=12 {
            for lam in all_partitions(m) {
                for prime in [2u32, 3] {
                    let core = lam.p_core(prime);
                    assert_eq!(core.p_core(prime), core);
                    assert_eq!(lam.size() % prime, core.size() % prime);
                    assert_eq!(lam.size(), core.size() + prime * lam.p_weight(prime));
                }
            }
        }
    }

    #[test]
    fn two_cores_are_triangular() {
        assert!(p(&[3, 2, 1]).is_two_core());
        assert!(!p(&[2, 2]).is_two_core());
        assert!(Partition::empty().is_two_core());
        for m in 0..=15 {
            for lam in all_partitions(m) {
                assert!(lam.p_core(2).is_two_core(), "core of {lam}");
            }
        }
    }

    #[test]
    fn core_enumeration() {
        assert_eq!(enumerate_p_cores(6, 2), vec![p(&[3, 2, 1])]);
        assert_eq!(enumerate_p_cores(2, 2), Vec::<Partition>::new());
        assert_eq!(enumerate_p_cores(0, 3), vec![Partition::empty()]);
        // 2-cores exist exactly at triangular sizes.
        for m in 0..=15 {
            let triangular = (0..).map(|k| k * (k + 1) / 2).take_while(|&t| t <= m).any(|t| t == m);
            assert_eq!(!enumerate_p_cores(m, 2).is_empty(), triangular, "m={m}");
        }
    }

    #[test]
    fn partition_count_sanity() {
        // p(n) for n = 0..9
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(all_partitions(n as u32).len(), count);
        }
    }

    #[test]
    fn bar_removal_basics() {
        let b = BarPartition::new(vec![3]);
        assert_eq!(b.p_bar_core(3), BarPartition::empty());
        assert_eq!(b.p_bar_weight(3), 1);
        let small = BarPartition::new(vec![2]);
        assert_eq!(small.p_bar_core(3), small);
        // Two parts summing to p are removable together.
        let pair = BarPartition::new(vec![2, 1]);
        assert_eq!(pair.p_bar_core(3), BarPartition::empty());
    }

    /// Exhaustive removal-order oracle for bar cores.
    fn all_bar_terminals(lam: &BarPartition, prime: u32) -> BTreeSet<BarPartition> {
        let removals = lam.bar_removals(prime);
        if removals.is_empty() {
            return BTreeSet::from([lam.clone()]);
        }
        removals
            .iter()
            .flat_map(|mu| all_bar_terminals(mu, prime))
            .collect()
    }

    #[test]
    fn bar_core_is_removal_order_independent_up_to_twenty() {
        for m in 0..=20 {
            for lam in all_bar_partitions(m) {
                for prime in [3u32, 5] {
                    let terminals = all_bar_terminals(&lam, prime);
                    assert_eq!(terminals.len(), 1, "order dependence at {lam} p={prime}");
                    assert_eq!(
                        lam.p_bar_core(prime),
                        terminals.into_iter().next().unwrap()
                    );
                    assert_eq!(
                        lam.size(),
                        lam.p_bar_core(prime).size() + prime * lam.p_bar_weight(prime)
                    );
                }
            }
        }
    }

    #[test]
    fn bar_core_of_five_four_at_three() {
        // (5,4): remove the 5 -> (4,2)? No: moves from (5,4) at p=3:
        // lower 5 to 2 -> (4,2); lower 4 to 1 -> (5,1); the oracle pins the
        // common terminal below.
        let lam = BarPartition::new(vec![5, 4]);
        let terminals = all_bar_terminals(&lam, 3);
        assert_eq!(terminals.len(), 1);
        let core = lam.p_bar_core(3);
        assert_eq!(core, terminals.into_iter().next().unwrap());
        // |(5,4)| = 9 = 0 + 3·3: the core is empty of weight 3.
        assert_eq!(core, BarPartition::empty());
        assert_eq!(lam.p_bar_weight(3), 3);
    }

    #[test]
    fn serialization_shape() {
        assert_eq!(p(&[3, 2, 1]).to_string(), "[3,2,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
    }
}
