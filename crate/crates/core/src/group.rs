//! Permutation groups given by generators, stored as a base and strong
//! generating set built by deterministic Schreier–Sims.
//!
//! Level `i` of the stabilizer chain holds base point `b_i`, the strong
//! generators fixing `b_0, .., b_{i-1}`, and an explicit transversal: for
//! every point `β` in the basic orbit a permutation `u` with `u(b_i) = β`.

use alloc::{collections::BTreeSet, format, vec, vec::Vec};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `(u, u⁻¹)` for each orbit point.
    transversal: Vec<Option<(Permutation, Permutation)>>,
    /// Schreier generators `(generator index, orbit point)` known to sift.
    checked: BTreeSet<(usize, usize)>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        let id = Permutation::identity(degree);
        transversal[point] = Some((id.clone(), id));
        Level {
            point,
            gens: Vec::new(),
            orbit: vec![point],
            transversal,
            checked: BTreeSet::new(),
        }
    }

    fn close_orbit(&mut self) {
        let mut k = 0;
        while k < self.orbit.len() {
            let beta = self.orbit[k];
            for s in &self.gens {
                let gamma = s.apply(beta);
                if self.transversal[gamma].is_none() {
                    let u = s.compose(&self.transversal[beta].as_ref().unwrap().0);
                    let inv = u.inverse();
                    self.transversal[gamma] = Some((u, inv));
                    self.orbit.push(gamma);
                }
            }
            k += 1;
        }
    }
}

#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
        }
    }

    /// The group generated by `gens`.
    pub fn new(degree: usize, gens: &[Permutation]) -> Result<Self> {
        Self::with_base_prefix(degree, gens, &[])
    }

    /// Builds a BSGS whose base starts with `prefix` (kept even where the
    /// group fixes those points); further base points are taken as the
    /// smallest point moved by the generator that needs one.
    pub fn with_base_prefix(degree: usize, gens: &[Permutation], prefix: &[usize]) -> Result<Self> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        for &p in prefix {
            if p >= degree {
                return Err(Error::VertexOutOfRange {
                    index: p + 1,
                    order: degree,
                });
            }
        }
        let mut generators: Vec<Permutation> = Vec::new();
        for g in gens {
            if !g.is_identity() && !generators.contains(g) {
                generators.push(g.clone());
            }
        }
        let mut group = PermGroup {
            degree,
            generators: generators.clone(),
            levels: prefix.iter().map(|&p| Level::new(p, degree)).collect(),
        };
        for g in generators {
            group.add_strong(0, g);
        }
        group.schreier_sims();
        Ok(group)
    }

    /// Inserts `g` (which fixes `b_0 .. b_{from-1}`) into every level it
    /// belongs to, appending a base point when it fixes the whole base.
    fn add_strong(&mut self, from: usize, g: Permutation) -> usize {
        let mut l = from;
        loop {
            if l == self.levels.len() {
                let point = g
                    .moved_points()
                    .find(|p| !self.levels.iter().any(|lv| lv.point == *p))
                    .expect("non-identity element fixing the base");
                self.levels.push(Level::new(point, self.degree));
            }
            let level = &mut self.levels[l];
            level.gens.push(g.clone());
            level.close_orbit();
            if !g.fixes(level.point) {
                return l;
            }
            l += 1;
        }
    }

    /// Sifts `g` from level `from` on; returns the residue and the level
    /// where sifting stopped (`levels.len()` when it passed every level).
    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let beta = g.apply(level.point);
            match &level.transversal[beta] {
                None => return (g, l),
                Some((_, inv)) => g = inv.compose(&g),
            }
        }
        let len = self.levels.len();
        (g, len)
    }

    fn schreier_sims(&mut self) {
        let mut i = self.levels.len();
        while i > 0 {
            let li = i - 1;
            let mut grew = None;
            'scan: for k in 0..self.levels[li].orbit.len() {
                let beta = self.levels[li].orbit[k];
                for gi in 0..self.levels[li].gens.len() {
                    if self.levels[li].checked.contains(&(gi, beta)) {
                        continue;
                    }
                    let level = &self.levels[li];
                    let s = &level.gens[gi];
                    let u_beta = &level.transversal[beta].as_ref().unwrap().0;
                    let inv_img = &level.transversal[s.apply(beta)].as_ref().unwrap().1;
                    let h = inv_img.compose(&s.compose(u_beta));
                    let (residue, _) = self.strip(h, li + 1);
                    if !residue.is_identity() {
                        let top = self.add_strong(li + 1, residue);
                        grew = Some(top);
                        break 'scan;
                    }
                    self.levels[li].checked.insert((gi, beta));
                }
            }
            match grew {
                Some(top) => i = top + 1,
                None => i -= 1,
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The generators the group was built from (identity removed).
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Sizes of the basic orbits, one per base point.
    pub fn basic_orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Order as a `u64` when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        self.levels
            .iter()
            .try_fold(1u64, |acc, l| acc.checked_mul(l.orbit.len() as u64))
    }

    pub fn contains(&self, sigma: &Permutation) -> Result<bool> {
        if sigma.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: sigma.degree(),
            });
        }
        let (residue, _) = self.strip(sigma.clone(), 0);
        Ok(residue.is_identity())
    }

    fn check_point(&self, p: usize) -> Result<()> {
        if p >= self.degree {
            return Err(Error::VertexOutOfRange {
                index: p + 1,
                order: self.degree,
            });
        }
        Ok(())
    }

    /// Orbit of `point`, sorted.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        self.check_point(point)?;
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut orbit = vec![point];
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        Ok(orbit)
    }

    /// Orbit partition of `{0, .., n-1}`, ordered by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if assigned[p] {
                continue;
            }
            let orbit = self.orbit(p).expect("point in range");
            for &x in &orbit {
                assigned[x] = true;
            }
            out.push(orbit);
        }
        out
    }

    /// The point stabilizer, obtained by a base change putting `point` first.
    pub fn stabilizer(&self, point: usize) -> Result<PermGroup> {
        self.pointwise_stabilizer(&[point])
    }

    /// Pointwise stabilizer of `points`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        for &p in points {
            self.check_point(p)?;
        }
        let rebuilt = PermGroup::with_base_prefix(self.degree, &self.strong_generators(), points)?;
        let k = points.len();
        let levels: Vec<Level> = rebuilt.levels.into_iter().skip(k).collect();
        let generators = levels.first().map(|l| l.gens.clone()).unwrap_or_default();
        Ok(PermGroup {
            degree: self.degree,
            generators,
            levels,
        })
    }

    /// `order == n!`, compared exactly.
    pub fn is_symmetric(&self) -> bool {
        self.order() == factorial(self.degree)
    }

    /// Whether the group acts transitively on `subset`, which it must
    /// leave invariant. At most one point is always a single orbit.
    pub fn is_transitive_on(&self, subset: &[usize]) -> Result<bool> {
        let mut member = vec![false; self.degree];
        for &x in subset {
            self.check_point(x)?;
            member[x] = true;
        }
        if member.iter().filter(|&&m| m).count() <= 1 {
            return Ok(true);
        }
        for g in &self.generators {
            if subset.iter().any(|&x| !member[g.apply(x)]) {
                return Err(Error::NotInvariant);
            }
        }
        let Some(&first) = subset.first() else {
            return Ok(true);
        };
        let orbit = self.orbit(first)?;
        Ok(orbit.len() == member.iter().filter(|&&m| m).count())
    }

    /// All moved points of the generators.
    pub fn support(&self) -> Vec<usize> {
        let mut moved = vec![false; self.degree];
        for g in &self.generators {
            for p in g.moved_points() {
                moved[p] = true;
            }
        }
        (0..self.degree).filter(|&p| moved[p]).collect()
    }

    /// Internal direct product of two groups of the same degree with
    /// disjoint supports.
    pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
        if a.degree != b.degree {
            return Err(Error::DegreeMismatch {
                expected: a.degree,
                found: b.degree,
            });
        }
        let sb = b.support();
        if a.support().iter().any(|p| sb.contains(p)) {
            return Err(Error::OverlappingSupport);
        }
        let mut gens = a.generators.clone();
        gens.extend(b.generators.iter().cloned());
        PermGroup::new(a.degree, &gens)
    }

    /// Embeds a group acting on `{0, .., m-1}` into degree `degree`,
    /// acting on `offset .. offset + m`.
    pub fn embed(&self, offset: usize, degree: usize) -> Result<PermGroup> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.shifted(offset, degree))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, &gens)
    }

    /// Every element, provided the order is at most `limit`.
    pub fn elements(&self, limit: usize) -> Result<Vec<Permutation>> {
        match self.order_u64() {
            Some(o) if o <= limit as u64 => {}
            _ => return Err(Error::TooManyElements(format!("{}", self.order()))),
        }
        let mut out = vec![Permutation::identity(self.degree)];
        // g = u_0 ∘ u_1 ∘ .. ∘ u_k enumerates each element once
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for &beta in &level.orbit {
                let u = &level.transversal[beta].as_ref().unwrap().0;
                for g in &out {
                    next.push(u.compose(g));
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// The stabilizer-transitivity generation test: some point `k` whose
    /// stabilizer is transitive on the remaining points, together with a
    /// transposition `(j k)` in the group, forces the full symmetric group.
    pub fn symmetric_by_stabilizer_test(&self) -> Result<bool> {
        let n = self.degree;
        if n <= 1 {
            return Ok(true);
        }
        for k in 0..n {
            let stab = self.stabilizer(k)?;
            let rest: Vec<usize> = (0..n).filter(|&x| x != k).collect();
            if !stab.is_transitive_on(&rest)? {
                continue;
            }
            for j in 0..n {
                if j != k && self.contains(&Permutation::transposition(n, j, k)?)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn symmetric_group_order() {
        let g = PermGroup::new(10, &[perm("(1 2)", 10), perm("(1 2 3 4 5 6 7 8 9 10)", 10)]).unwrap();
        assert_eq!(g.order(), BigUint::from(3_628_800u32));
        assert!(g.is_symmetric());
        assert!(g.symmetric_by_stabilizer_test().unwrap());
    }

    #[test]
    fn small_groups() {
        let c3 = PermGroup::new(3, &[perm("(1 2 3)", 3)]).unwrap();
        assert_eq!(c3.order(), BigUint::from(3u32));
        assert!(!c3.contains(&perm("(1 2)", 3)).unwrap());
        let s3 = PermGroup::new(3, &[perm("(1 2)", 3), perm("(1 2 3)", 3)]).unwrap();
        assert!(s3.contains(&perm("(1 2)", 3)).unwrap());
        let aut_p4 = PermGroup::new(4, &[Permutation::identity(4), perm("(1 4)(2 3)", 4)]).unwrap();
        assert_eq!(aut_p4.order(), BigUint::from(2u32));
        assert_eq!(PermGroup::trivial(4).order(), BigUint::one());
        assert!(PermGroup::new(3, &[perm("(1 2)", 4)]).is_err());
    }

    #[test]
    fn orbits_and_stabilizers() {
        let c3 = PermGroup::new(5, &[perm("(1 2 3)", 5)]).unwrap();
        assert_eq!(c3.orbit(3).unwrap(), vec![3]);
        assert_eq!(c3.orbits(), vec![vec![0, 1, 2], vec![3], vec![4]]);
        let s4 = PermGroup::new(4, &[perm("(1 2)", 4), perm("(1 2 3 4)", 4)]).unwrap();
        assert_eq!(s4.orbit(0).unwrap(), vec![0, 1, 2, 3]);
        let st = s4.stabilizer(3).unwrap();
        assert_eq!(st.order(), BigUint::from(6u32));
        assert!(st.contains(&perm("(1 2 3)", 4)).unwrap());
        assert!(!st.contains(&perm("(3 4)", 4)).unwrap());
        assert_eq!(PermGroup::trivial(3).stabilizer(1).unwrap().order(), BigUint::one());
        assert!(s4.orbit(4).is_err());
    }

    #[test]
    fn transitivity_requires_invariance() {
        let g = PermGroup::new(3, &[perm("(1 2)", 3)]).unwrap();
        assert_eq!(g.is_transitive_on(&[0, 2]), Err(Error::NotInvariant));
        assert!(!g.is_transitive_on(&[0, 1, 2]).unwrap());
        assert!(g.is_transitive_on(&[0, 1]).unwrap());
        assert!(g.is_transitive_on(&[2]).unwrap());
    }

    #[test]
    fn direct_products() {
        let a = PermGroup::new(4, &[perm("(1 2)", 4)]).unwrap();
        let b = PermGroup::new(4, &[perm("(3 4)", 4)]).unwrap();
        assert_eq!(PermGroup::direct_product(&a, &b).unwrap().order(), BigUint::from(4u32));
        assert_eq!(
            PermGroup::direct_product(&a, &a).unwrap_err(),
            Error::OverlappingSupport
        );
        let t = PermGroup::trivial(4);
        assert_eq!(PermGroup::direct_product(&t, &b).unwrap().order(), BigUint::from(2u32));
        let s2 = PermGroup::new(2, &[perm("(1 2)", 2)]).unwrap();
        let lifted = s2.embed(2, 4).unwrap();
        assert!(lifted.contains(&perm("(3 4)", 4)).unwrap());
    }

    #[test]
    fn elements_enumerate_each_once() {
        let s4 = PermGroup::new(4, &[perm("(1 2)", 4), perm("(1 2 3 4)", 4)]).unwrap();
        let mut els = s4.elements(100).unwrap();
        assert_eq!(els.len(), 24);
        els.sort();
        els.dedup();
        assert_eq!(els.len(), 24);
        assert!(s4.elements(10).is_err());
    }
}
