//! Finite groups given by explicit multiplication tables.
//!
//! Element `0` is always the identity. Family constructors enumerate elements
//! in a fixed canonical order so that subsets chosen downstream ("the first
//! generating pair", "the lexicographically least filler set") are
//! reproducible:
//!
//! * cyclic `C_n`: index `i` is `x^i`;
//! * direct products: lexicographic tuples, first factor most significant;
//! * dihedral group of order `2r`: index `i < r` is `r^i`, index `r + i` is `r^i s`;
//! * `A4`: even permutations of `{0,1,2,3}` in lexicographic order;
//! * `Q8`: `1, -1, i, -i, j, -j, k, -k`;
//! * `X27` (`3_+^{1+2}`): triples `(a, b, c)` over `Z/3` with
//!   `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')`, lexicographic.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::elemset::{ElemSet, ELEMSET_CAPACITY};
use crate::error::{Error, Result};

/// Largest supported group order.
pub const MAX_GROUP_ORDER: usize = ELEMSET_CAPACITY;

/// Largest generating-set size explored by [`Group::minimal_generating_size`].
pub const MAX_GENERATING_SIZE: usize = 6;

/// Structured family tag of a constructed group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Descriptor {
    Cyclic(usize),
    ElemAbelian { p: usize, k: usize },
    /// Dihedral group, parameterized by its ORDER.
    Dihedral(usize),
    Alternating4,
    Quaternion8,
    /// The nonabelian group of order 27 and exponent 3.
    Extraspecial27,
    Product(Vec<Descriptor>),
    Custom,
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Cyclic(n) => write!(f, "C{n}"),
            Descriptor::ElemAbelian { p, k } => write!(f, "C{p}^{k}"),
            Descriptor::Dihedral(n) => write!(f, "D{n}"),
            Descriptor::Alternating4 => f.write_str("A4"),
            Descriptor::Quaternion8 => f.write_str("Q8"),
            Descriptor::Extraspecial27 => f.write_str("X27"),
            Descriptor::Product(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            Descriptor::Custom => f.write_str("custom"),
        }
    }
}

/// The twelve small groups treated by explicit catalog constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum G0 {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C2Sq,
    C2Cube,
    C3Sq,
    D6,
    A4,
    X27,
}

impl G0 {
    pub const ALL: [G0; 12] = [
        G0::C1,
        G0::C2,
        G0::C3,
        G0::C4,
        G0::C5,
        G0::C6,
        G0::C2Sq,
        G0::C2Cube,
        G0::C3Sq,
        G0::D6,
        G0::A4,
        G0::X27,
    ];

    pub fn order(self) -> usize {
        match self {
            G0::C1 => 1,
            G0::C2 => 2,
            G0::C3 => 3,
            G0::C4 | G0::C2Sq => 4,
            G0::C5 => 5,
            G0::C6 | G0::D6 => 6,
            G0::C2Cube => 8,
            G0::C3Sq => 9,
            G0::A4 => 12,
            G0::X27 => 27,
        }
    }

    /// Family descriptor of the standard construction of this group.
    pub fn descriptor(self) -> Descriptor {
        match self {
            G0::C1 => Descriptor::Cyclic(1),
            G0::C2 => Descriptor::Cyclic(2),
            G0::C3 => Descriptor::Cyclic(3),
            G0::C4 => Descriptor::Cyclic(4),
            G0::C5 => Descriptor::Cyclic(5),
            G0::C6 => Descriptor::Cyclic(6),
            G0::C2Sq => Descriptor::ElemAbelian { p: 2, k: 2 },
            G0::C2Cube => Descriptor::ElemAbelian { p: 2, k: 3 },
            G0::C3Sq => Descriptor::ElemAbelian { p: 3, k: 2 },
            G0::D6 => Descriptor::Dihedral(6),
            G0::A4 => Descriptor::Alternating4,
            G0::X27 => Descriptor::Extraspecial27,
        }
    }

    pub fn build(self) -> Group {
        Group::standard_family(&self.descriptor()).expect("standard G0 member")
    }

    fn abelian(self) -> bool {
        !matches!(self, G0::D6 | G0::A4 | G0::X27)
    }

    /// Sorted multiset of element orders.
    fn order_profile(self) -> Vec<usize> {
        let mut v = self.build().order_multiset();
        v.sort_unstable();
        v
    }
}

impl fmt::Display for G0 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            G0::C1 => "C1",
            G0::C2 => "C2",
            G0::C3 => "C3",
            G0::C4 => "C4",
            G0::C5 => "C5",
            G0::C6 => "C6",
            G0::C2Sq => "C2^2",
            G0::C2Cube => "C2^3",
            G0::C3Sq => "C3^2",
            G0::D6 => "D6",
            G0::A4 => "A4",
            G0::X27 => "X27",
        };
        f.write_str(s)
    }
}

/// A generating set `(h_1, ..., h_t)` of a group, as element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingSet {
    pub elements: Vec<usize>,
}

impl GeneratingSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// A finite group as a validated multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    order: usize,
    table: Vec<u16>,
    inverses: Vec<u16>,
    orders: Vec<u16>,
    names: Vec<String>,
    descriptor: Descriptor,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("order", &self.order)
            .field("descriptor", &self.descriptor)
            .finish_non_exhaustive()
    }
}

impl Group {
    /// Builds a group from a product function, validating every axiom.
    pub fn from_fn(
        n: usize,
        mul: impl Fn(usize, usize) -> usize,
        names: Vec<String>,
        descriptor: Descriptor,
    ) -> Result<Group> {
        if n == 0 {
            return Err(Error::InvalidArgument("group order must be positive".into()));
        }
        if n > MAX_GROUP_ORDER {
            return Err(Error::Capacity {
                what: "group order",
                limit: MAX_GROUP_ORDER as u128,
                requested: n as u128,
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let c = mul(a, b);
                if c >= n {
                    return Err(Error::GroupAxiom { axiom: "closure", triple: [a, b, c] });
                }
                table.push(c as u16);
            }
        }
        Self::from_flat_table(n, table, names, descriptor)
    }

    /// Ingests an arbitrary table (row `g`, column `h` holds `g*h`).
    pub fn from_table(table: &[Vec<usize>], names: Option<Vec<String>>) -> Result<Group> {
        let n = table.len();
        if let Some((r, row)) = table.iter().enumerate().find(|(_, row)| row.len() != n) {
            return Err(Error::InvalidArgument(format!(
                "row {r} has {} entries, expected {n}",
                row.len()
            )));
        }
        let names = match names {
            Some(v) if v.len() != n => {
                return Err(Error::InvalidArgument(format!(
                    "{} names supplied for a group of order {n}",
                    v.len()
                )))
            }
            Some(v) => v,
            None => (0..n).map(|i| if i == 0 { "1".into() } else { format!("g{i}") }).collect(),
        };
        Self::from_fn(n, |a, b| table[a][b], names, Descriptor::Custom)
    }

    fn from_flat_table(
        n: usize,
        table: Vec<u16>,
        names: Vec<String>,
        descriptor: Descriptor,
    ) -> Result<Group> {
        if names.len() != n {
            return Err(Error::InvalidArgument("name count differs from order".into()));
        }
        let at = |a: usize, b: usize| table[a * n + b] as usize;
        for g in 0..n {
            if at(0, g) != g || at(g, 0) != g {
                return Err(Error::GroupAxiom { axiom: "identity at index 0", triple: [0, g, g] });
            }
        }
        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let c = at(a, b);
                if seen[c] == a {
                    return Err(Error::GroupAxiom { axiom: "row is a permutation", triple: [a, b, c] });
                }
                seen[c] = a;
            }
        }
        let mut seen = vec![usize::MAX; n];
        for b in 0..n {
            for a in 0..n {
                let c = at(a, b);
                if seen[c] == b {
                    return Err(Error::GroupAxiom {
                        axiom: "column is a permutation",
                        triple: [a, b, c],
                    });
                }
                seen[c] = b;
            }
        }
        check_associativity(n, &at)?;
        let mut inverses = vec![0u16; n];
        for a in 0..n {
            let b = (0..n).find(|&b| at(a, b) == 0).expect("latin square");
            if at(b, a) != 0 {
                return Err(Error::GroupAxiom { axiom: "two-sided inverse", triple: [a, b, at(b, a)] });
            }
            inverses[a] = b as u16;
        }
        let mut orders = vec![0u16; n];
        for g in 0..n {
            let (mut k, mut x) = (1usize, g);
            while x != 0 {
                x = at(x, g);
                k += 1;
            }
            orders[g] = k as u16;
        }
        Ok(Group { order: n, table, inverses, orders, names, descriptor })
    }

    /// `Z/nZ` with the generator at index 1.
    pub fn cyclic(n: usize) -> Result<Group> {
        if n == 0 {
            return Err(Error::InvalidArgument("cyclic group order must be positive".into()));
        }
        let names = (0..n).map(power_name).collect();
        Self::from_fn(n, |a, b| (a + b) % n, names, Descriptor::Cyclic(n))
    }

    /// Direct product with lexicographic tuple ordering.
    pub fn product(factors: &[Group]) -> Result<Group> {
        if factors.is_empty() {
            return Self::cyclic(1);
        }
        let n: usize = factors.iter().map(|g| g.order).product();
        if n > MAX_GROUP_ORDER {
            return Err(Error::Capacity {
                what: "group order",
                limit: MAX_GROUP_ORDER as u128,
                requested: n as u128,
            });
        }
        let split = |mut idx: usize| {
            let mut digits = vec![0usize; factors.len()];
            for (d, g) in digits.iter_mut().zip(factors).rev() {
                *d = idx % g.order;
                idx /= g.order;
            }
            digits
        };
        let join = |digits: &[usize]| digits.iter().zip(factors).fold(0, |acc, (d, g)| acc * g.order + d);
        let names = (0..n)
            .map(|i| {
                if i == 0 {
                    return "1".to_string();
                }
                let parts: Vec<&str> =
                    split(i).iter().zip(factors).map(|(&d, g)| g.names[d].as_str()).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let descriptor = Descriptor::Product(factors.iter().map(|g| g.descriptor.clone()).collect());
        Self::from_fn(
            n,
            |a, b| {
                let (da, db) = (split(a), split(b));
                let dc: Vec<usize> =
                    da.iter().zip(&db).zip(factors).map(|((&x, &y), g)| g.mul(x, y)).collect();
                join(&dc)
            },
            names,
            descriptor,
        )
    }

    /// Constructs a group from its family descriptor.
    pub fn standard_family(descriptor: &Descriptor) -> Result<Group> {
        match descriptor {
            Descriptor::Cyclic(n) => Self::cyclic(*n),
            Descriptor::ElemAbelian { p, k } => {
                let prime = *p >= 2 && (2..*p).take_while(|d| d * d <= *p).all(|d| !p.is_multiple_of(d));
                if !prime || *k == 0 {
                    return Err(Error::InvalidArgument(format!(
                        "elementary abelian group needs a prime p and k >= 1, got C{p}^{k}"
                    )));
                }
                let factor = Self::cyclic(*p)?;
                let factors = vec![factor; *k];
                let mut g = Self::product(&factors)?;
                g.descriptor = descriptor.clone();
                Ok(g)
            }
            Descriptor::Dihedral(n) => Self::dihedral(*n),
            Descriptor::Alternating4 => Ok(Self::alternating4()),
            Descriptor::Quaternion8 => Ok(Self::quaternion8()),
            Descriptor::Extraspecial27 => Ok(Self::extraspecial27()),
            Descriptor::Product(parts) => {
                let factors = parts.iter().map(Self::standard_family).collect::<Result<Vec<_>>>()?;
                Self::product(&factors)
            }
            Descriptor::Custom => {
                Err(Error::InvalidArgument("custom groups are built from a table".into()))
            }
        }
    }

    /// Dihedral group of ORDER `n` (even, at least 6).
    pub fn dihedral(n: usize) -> Result<Group> {
        if n < 6 || n % 2 == 1 {
            return Err(Error::InvalidArgument(format!(
                "dihedral group order must be even and at least 6, got {n}"
            )));
        }
        let r = n / 2;
        let names = (0..n)
            .map(|i| {
                let rot = if i % r == 0 { String::new() } else if i % r == 1 { "r".into() } else { format!("r^{}", i % r) };
                match (i < r, rot.is_empty()) {
                    (true, true) => "1".into(),
                    (true, false) => rot,
                    (false, true) => "s".into(),
                    (false, false) => format!("{rot}s"),
                }
            })
            .collect();
        Self::from_fn(
            n,
            |a, b| {
                let (ra, sa) = (a % r, a / r);
                let (rb, sb) = (b % r, b / r);
                let rot = if sa == 0 { (ra + rb) % r } else { (ra + r - rb) % r };
                rot + r * ((sa + sb) % 2)
            },
            names,
            Descriptor::Dihedral(n),
        )
    }

    pub fn alternating4() -> Group {
        let mut perms: Vec<[usize; 4]> = Vec::new();
        permutations4(&mut perms);
        perms.retain(|p| parity(p) == 0);
        let idx = |p: &[usize; 4]| perms.iter().position(|q| q == p).expect("closed");
        let names = perms.iter().map(cycle_name).collect();
        Self::from_fn(
            12,
            |a, b| {
                let (p, q) = (perms[a], perms[b]);
                // apply p first, then q
                let c = [q[p[0]], q[p[1]], q[p[2]], q[p[3]]];
                idx(&c)
            },
            names,
            Descriptor::Alternating4,
        )
        .expect("A4 table is a group")
    }

    pub fn quaternion8() -> Group {
        // unit q = (sign, axis) with axis 0 = 1, 1 = i, 2 = j, 3 = k
        let decode = |e: usize| (e % 2, e / 2);
        let encode = |sign: usize, axis: usize| axis * 2 + sign;
        let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].iter().map(|s| s.to_string()).collect();
        Self::from_fn(
            8,
            |a, b| {
                let ((sa, xa), (sb, xb)) = (decode(a), decode(b));
                let (sign, axis) = match (xa, xb) {
                    (0, x) | (x, 0) => (0, x),
                    (x, y) if x == y => (1, 0),
                    (x, y) => {
                        let z = 6 - x - y;
                        // i*j = k, j*k = i, k*i = j
                        let cyclic = (x % 3) + 1 == y;
                        (usize::from(!cyclic), z)
                    }
                };
                encode((sa + sb + sign) % 2, axis)
            },
            names,
            Descriptor::Quaternion8,
        )
        .expect("Q8 table is a group")
    }

    pub fn extraspecial27() -> Group {
        let decode = |e: usize| (e / 9, (e / 3) % 3, e % 3);
        let names = (0..27)
            .map(|e| {
                if e == 0 {
                    "1".to_string()
                } else {
                    let (a, b, c) = decode(e);
                    format!("({a},{b},{c})")
                }
            })
            .collect();
        Self::from_fn(
            27,
            |x, y| {
                let ((a, b, c), (a2, b2, c2)) = (decode(x), decode(y));
                ((a + a2) % 3) * 9 + ((b + b2) % 3) * 3 + (c + c2 + a * b2) % 3
            },
            names,
            Descriptor::Extraspecial27,
        )
        .expect("X27 table is a group")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.descriptor
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub const IDENTITY: usize = 0;

    /// Full table as nested rows.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g * self.order + h] as usize
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inverses[g] as usize
    }

    #[inline]
    pub fn element_order(&self, g: usize) -> usize {
        self.orders[g] as usize
    }

    pub fn checked_mul(&self, g: usize, h: usize) -> Result<usize> {
        self.check_index(g)?;
        self.check_index(h)?;
        Ok(self.mul(g, h))
    }

    pub fn checked_inv(&self, g: usize) -> Result<usize> {
        self.check_index(g)?;
        Ok(self.inv(g))
    }

    pub fn checked_element_order(&self, g: usize) -> Result<usize> {
        self.check_index(g)?;
        Ok(self.element_order(g))
    }

    fn check_index(&self, g: usize) -> Result<()> {
        if g < self.order {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "element index {g} out of range for group of order {}",
                self.order
            )))
        }
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        let n = self.element_order(g) as i64;
        let e = k.rem_euclid(n);
        (0..e).fold(0, |acc, _| self.mul(acc, g))
    }

    /// Left-to-right product of a word of elements.
    pub fn product_of(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &g| self.mul(acc, g))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Element orders, indexed by element.
    pub fn order_multiset(&self) -> Vec<usize> {
        self.orders.iter().map(|&o| o as usize).collect()
    }

    pub fn exponent(&self) -> usize {
        self.orders.iter().fold(1usize, |acc, &o| lcm(acc, o as usize))
    }

    /// Whether every non-identity element is an involution.
    pub fn is_elementary_abelian_2(&self) -> bool {
        self.orders.iter().skip(1).all(|&o| o == 2)
    }

    pub fn inverse_set(&self, set: &ElemSet) -> ElemSet {
        set.iter().map(|g| self.inv(g)).collect()
    }

    pub fn all_elements(&self) -> ElemSet {
        ElemSet::full(self.order)
    }

    /// Closure of `gens` together with the identity.
    pub fn subgroup_generated(&self, gens: &[usize]) -> ElemSet {
        let mut set = ElemSet::singleton(0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(g) = queue.pop_front() {
            for &s in gens {
                let h = self.mul(g, s);
                if set.insert(h) {
                    queue.push_back(h);
                }
            }
        }
        set
    }

    pub fn generates(&self, gens: &[usize]) -> bool {
        self.subgroup_generated(gens).len() == self.order
    }

    /// `d(G)`: the least size of a generating set.
    pub fn minimal_generating_size(&self) -> Result<usize> {
        Ok(self.first_minimal_generating_set()?.len())
    }

    /// A generating set of size `d(G)` with `h_1` of order at least 3 whenever
    /// the group is not an elementary abelian 2-group.
    pub fn minimal_generating_set(&self) -> Result<GeneratingSet> {
        let mut elements = self.first_minimal_generating_set()?;
        if let Some(pos) = elements.iter().position(|&h| self.element_order(h) >= 3) {
            let h = elements.remove(pos);
            elements.insert(0, h);
        } else if !elements.is_empty() && !self.is_elementary_abelian_2() {
            // All generators are involutions: replace one by a product of order >= 3.
            let t = elements.len();
            let (i, j) = (0..t)
                .flat_map(|i| (0..t).map(move |j| (i, j)))
                .find(|&(i, j)| i != j && self.element_order(self.mul(elements[i], elements[j])) >= 3)
                .expect("non-commuting involution pair exists outside elementary abelian 2-groups");
            let replacement = self.mul(elements[i], elements[j]);
            elements.remove(i);
            elements.insert(0, replacement);
        }
        debug_assert!(self.generates(&elements));
        Ok(GeneratingSet { elements })
    }

    fn first_minimal_generating_set(&self) -> Result<Vec<usize>> {
        if self.order == 1 {
            return Ok(Vec::new());
        }
        // Whether H can be completed depends only on (H, remaining), so
        // failed subgroups are remembered per depth.
        let mut failed: Vec<BTreeSet<ElemSet>> = vec![BTreeSet::new(); MAX_GENERATING_SIZE + 1];
        for t in 1..=MAX_GENERATING_SIZE {
            let mut chosen = Vec::with_capacity(t);
            if self.search_generating(t, &mut chosen, ElemSet::singleton(0), &mut failed) {
                return Ok(chosen);
            }
        }
        Err(Error::Capacity {
            what: "generating set size",
            limit: MAX_GENERATING_SIZE as u128,
            requested: MAX_GENERATING_SIZE as u128 + 1,
        })
    }

    fn search_generating(
        &self,
        t: usize,
        chosen: &mut Vec<usize>,
        closure: ElemSet,
        failed: &mut [BTreeSet<ElemSet>],
    ) -> bool {
        if closure.len() == self.order {
            return true;
        }
        let remaining = t - chosen.len();
        if remaining == 0 || failed[remaining].contains(&closure) {
            return false;
        }
        let mut tried: BTreeSet<ElemSet> = BTreeSet::new();
        for g in 1..self.order {
            if closure.contains(g) {
                continue;
            }
            chosen.push(g);
            let next = self.subgroup_generated(chosen);
            if tried.insert(next) && self.search_generating(t, chosen, next, failed) {
                return true;
            }
            chosen.pop();
        }
        failed[remaining].insert(closure);
        false
    }

    /// A generating pair `(x, y)` with `|x| >= 4`.
    pub fn pair_with_order_ge4(&self) -> Result<(usize, usize)> {
        for x in (1..self.order).filter(|&x| self.element_order(x) >= 4) {
            for y in 0..self.order {
                if self.generates(&[x, y]) {
                    return Ok((x, y));
                }
            }
        }
        Err(Error::NotFound(format!(
            "no generating pair (x, y) with |x| >= 4 in group {}",
            self.descriptor
        )))
    }

    /// A generating triple `(x, y, z)` with `|x| >= 3`.
    pub fn triple_with_order_ge3(&self) -> Result<(usize, usize, usize)> {
        for x in (1..self.order).filter(|&x| self.element_order(x) >= 3) {
            for y in 0..self.order {
                for z in y + 1..self.order {
                    if self.generates(&[x, y, z]) {
                        return Ok((x, y, z));
                    }
                }
            }
        }
        Err(Error::NotFound(format!(
            "no generating triple (x, y, z) with |x| >= 3 in group {}",
            self.descriptor
        )))
    }

    /// Identifies membership in the twelve-group family by order,
    /// commutativity and element-order multiset.
    pub fn identify_g0(&self) -> Option<G0> {
        let mut profile = self.order_multiset();
        profile.sort_unstable();
        let abelian = self.is_abelian();
        G0::ALL.into_iter().find(|tag| {
            tag.order() == self.order && tag.abelian() == abelian && tag.order_profile() == profile
        })
    }
}

fn check_associativity(n: usize, at: &impl Fn(usize, usize) -> usize) -> Result<()> {
    // Elements g with (xg)y = x(gy) for all x, y form a submagma, so it is
    // enough to test a set whose generated submagma is everything.
    let mut gens = Vec::new();
    let mut closure = ElemSet::singleton(0);
    for g in 0..n {
        if closure.contains(g) {
            continue;
        }
        gens.push(g);
        closure = magma_closure(n, at, &gens);
    }
    for &g in &gens {
        for x in 0..n {
            let xg = at(x, g);
            for y in 0..n {
                if at(xg, y) != at(x, at(g, y)) {
                    return Err(Error::GroupAxiom { axiom: "associativity", triple: [x, g, y] });
                }
            }
        }
    }
    Ok(())
}

fn magma_closure(n: usize, at: &impl Fn(usize, usize) -> usize, gens: &[usize]) -> ElemSet {
    let mut set: ElemSet = gens.iter().copied().collect();
    set.insert(0);
    loop {
        let members: Vec<usize> = set.iter().collect();
        let before = set.len();
        for &a in &members {
            for &b in &members {
                set.insert(at(a, b));
            }
        }
        if set.len() == before || set.len() == n {
            return set;
        }
    }
}

fn power_name(i: usize) -> String {
    match i {
        0 => "1".into(),
        1 => "x".into(),
        _ => format!("x^{i}"),
    }
}

fn permutations4(out: &mut Vec<[usize; 4]>) {
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    p.iter().for_each(|&x| seen[x] = true);
                    if seen.iter().all(|&s| s) {
                        out.push(p);
                    }
                }
            }
        }
    }
}

fn parity(p: &[usize; 4]) -> usize {
    let mut inv = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2
}

fn cycle_name(p: &[usize; 4]) -> String {
    let mut seen = [false; 4];
    let mut out = String::new();
    for s in 0..4 {
        if seen[s] || p[s] == s {
            continue;
        }
        out.push('(');
        let mut x = s;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&x.to_string());
            first = false;
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "1".into()
    } else {
        out
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_orders(g: &Group) -> Vec<usize> {
        let mut v = g.order_multiset();
        v.sort_unstable();
        v
    }

    #[test]
    fn cyclic_examples() {
        let c1 = Group::cyclic(1).unwrap();
        assert_eq!(c1.order(), 1);
        assert_eq!(c1.minimal_generating_size().unwrap(), 0);
        let c6 = Group::cyclic(6).unwrap();
        assert_eq!(c6.element_order(1), 6);
        assert_eq!(c6.element_order(3), 2);
        assert_eq!(c6.name(3), "x^3");
        assert_eq!(sorted_orders(&Group::cyclic(5).unwrap()), [1, 5, 5, 5, 5]);
        assert!(Group::cyclic(0).is_err());
    }

    #[test]
    fn family_examples() {
        let d6 = Group::dihedral(6).unwrap();
        assert!(!d6.is_abelian());
        assert_eq!(sorted_orders(&d6), [1, 2, 2, 2, 3, 3]);
        assert_eq!(d6.element_order(1), 3);
        let x27 = Group::extraspecial27();
        assert_eq!(x27.order(), 27);
        assert_eq!(x27.exponent(), 3);
        assert!(!x27.is_abelian());
        let e = Group::standard_family(&Descriptor::ElemAbelian { p: 2, k: 3 }).unwrap();
        assert!(e.is_elementary_abelian_2());
        assert!(Group::dihedral(7).is_err());
        assert!(Group::dihedral(4).is_err());
        assert_eq!(Group::standard_family(&Descriptor::ElemAbelian { p: 5, k: 2 }).unwrap().order(), 25);
        assert!(Group::standard_family(&Descriptor::ElemAbelian { p: 4, k: 2 }).is_err());
        let q8 = Group::quaternion8();
        assert_eq!(sorted_orders(&q8), [1, 2, 4, 4, 4, 4, 4, 4]);
        assert!(!q8.is_abelian());
        let a4 = Group::alternating4();
        assert_eq!(sorted_orders(&a4), [1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3]);
    }

    #[test]
    fn checked_ops_reject_out_of_range() {
        let c4 = Group::cyclic(4).unwrap();
        assert_eq!(c4.checked_element_order(0).unwrap(), 1);
        assert!(c4.checked_mul(4, 0).is_err());
        assert!(c4.checked_inv(9).is_err());
    }

    #[test]
    fn subgroup_examples() {
        let c6 = Group::cyclic(6).unwrap();
        assert_eq!(c6.subgroup_generated(&[]).iter().collect::<Vec<_>>(), [0]);
        assert_eq!(c6.subgroup_generated(&[2]).iter().collect::<Vec<_>>(), [0, 2, 4]);
    }

    #[test]
    fn rank_examples() {
        let e3 = Group::standard_family(&Descriptor::ElemAbelian { p: 2, k: 3 }).unwrap();
        assert_eq!(e3.minimal_generating_size().unwrap(), 3);
        assert_eq!(Group::dihedral(6).unwrap().minimal_generating_size().unwrap(), 2);
        let e4 = Group::standard_family(&Descriptor::ElemAbelian { p: 2, k: 4 }).unwrap();
        let gs = e4.minimal_generating_set().unwrap();
        assert_eq!(gs.len(), 4);
        let t4 = Group::standard_family(&Descriptor::ElemAbelian { p: 3, k: 4 }).unwrap();
        let gs = t4.minimal_generating_set().unwrap();
        assert_eq!(gs.len(), 4);
        assert_eq!(t4.element_order(gs.elements[0]), 3);
        let mixed = Group::product(&[e4, Group::cyclic(3).unwrap()]).unwrap();
        let gs = mixed.minimal_generating_set().unwrap();
        assert_eq!(gs.len(), 4);
        assert!(mixed.element_order(gs.elements[0]) >= 3);
    }

    #[test]
    fn involution_replacement_in_dihedral_groups() {
        // D8 has a minimal generating set consisting of two reflections
        let d8 = Group::dihedral(8).unwrap();
        let gs = d8.minimal_generating_set().unwrap();
        assert_eq!(gs.len(), 2);
        assert!(d8.element_order(gs.elements[0]) >= 3);
        assert!(d8.generates(&gs.elements));
    }

    #[test]
    fn pair_and_triple_searches() {
        let q8 = Group::quaternion8();
        let (x, y) = q8.pair_with_order_ge4().unwrap();
        assert_eq!(q8.element_order(x), 4);
        assert!(q8.generates(&[x, y]));
        let d8 = Group::dihedral(8).unwrap();
        let (x, y) = d8.pair_with_order_ge4().unwrap();
        assert_eq!(d8.element_order(x), 4);
        assert_eq!(d8.element_order(y), 2);
        let c3sq = Group::standard_family(&Descriptor::ElemAbelian { p: 3, k: 2 }).unwrap();
        assert!(matches!(c3sq.pair_with_order_ge4(), Err(Error::NotFound(_))));

        let c33 = Group::standard_family(&Descriptor::ElemAbelian { p: 3, k: 3 }).unwrap();
        let (x, y, z) = c33.triple_with_order_ge3().unwrap();
        assert!([x, y, z].iter().all(|&e| c33.element_order(e) == 3));
        let c224 = Group::standard_family(&Descriptor::Product(vec![
            Descriptor::ElemAbelian { p: 2, k: 2 },
            Descriptor::Cyclic(4),
        ]))
        .unwrap();
        let (x, _, _) = c224.triple_with_order_ge3().unwrap();
        assert_eq!(c224.element_order(x), 4);
        let e3 = Group::standard_family(&Descriptor::ElemAbelian { p: 2, k: 3 }).unwrap();
        assert!(matches!(e3.triple_with_order_ge3(), Err(Error::NotFound(_))));
    }

    #[test]
    fn g0_identification() {
        assert_eq!(Group::cyclic(4).unwrap().identify_g0(), Some(G0::C4));
        assert_eq!(Group::dihedral(6).unwrap().identify_g0(), Some(G0::D6));
        assert_eq!(Group::cyclic(9).unwrap().identify_g0(), None);
        for tag in G0::ALL {
            assert_eq!(tag.build().identify_g0(), Some(tag));
        }
    }

    #[test]
    fn table_validation_reports_offending_triple() {
        // Z/3 with a broken entry: 1*1 = 0 breaks the latin property in row 1.
        let bad = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 1]];
        assert!(matches!(Group::from_table(&bad, None), Err(Error::GroupAxiom { .. })));
        // A latin square with identity that is not associative (order 5 loop).
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match Group::from_table(&loop5, None) {
            Err(Error::GroupAxiom { axiom: "associativity", triple }) => {
                let [a, b, c] = triple;
                let at = |x: usize, y: usize| loop5[x][y];
                assert_ne!(at(at(a, b), c), at(a, at(b, c)));
            }
            other => panic!("expected associativity failure, got {other:?}"),
        }
        let good = Group::cyclic(7).unwrap().table_rows();
        assert!(Group::from_table(&good, None).is_ok());
    }
}
