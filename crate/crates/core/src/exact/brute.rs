use crate::{Error, NodeSet, ProblemKind, Result, Solution, WeightedInstance};

/// Largest node count the brute-force oracle accepts by default.
pub const DEFAULT_BRUTE_CAP: usize = 20;

/// Optimal solution by enumerating all `2^n` subsets.
///
/// Maximizes weight for the plain kinds and minimizes it for the maximal
/// kinds. Among optimal sets the lexicographically smallest (as an ascending
/// id sequence) is returned. `None` means no feasible set exists.
pub fn brute_force(inst: &WeightedInstance) -> Result<Option<Solution>> {
    brute_force_with_cap(inst, DEFAULT_BRUTE_CAP)
}

pub fn brute_force_with_cap(inst: &WeightedInstance, cap: usize) -> Result<Option<Solution>> {
    let n = inst.node_count();
    if n > cap || n > 30 {
        return Err(Error::Refused(format!(
            "brute force over {n} nodes exceeds the cap of {}",
            cap.min(30)
        )));
    }
    let masks = Masks::new(inst);
    let kind = inst.kind();
    let mut best: Option<(u64, NodeSet)> = None;
    for mask in 0u32..(1u32 << n) {
        if !masks.feasible(mask, kind) {
            continue;
        }
        let w = masks.weight(mask);
        let better = match &best {
            None => true,
            Some((bw, bs)) => {
                let ord = if kind.is_maximal() {
                    bw.cmp(&w)
                } else {
                    w.cmp(bw)
                };
                match ord {
                    std::cmp::Ordering::Greater => true,
                    std::cmp::Ordering::Less => false,
                    std::cmp::Ordering::Equal => masks.set(mask).lex_cmp(bs).is_lt(),
                }
            }
        };
        if better {
            best = Some((w, masks.set(mask)));
        }
    }
    Ok(best.map(|(_, s)| inst.solution(s)))
}

/// Bitmask views of an instance with at most 32 nodes.
struct Masks {
    n: usize,
    weights: Vec<u64>,
    budget: u64,
    out: Vec<u32>,
    inn: Vec<u32>,
    /// Reflexive descendants.
    desc: Vec<u32>,
}

impl Masks {
    pub fn new(inst: &WeightedInstance) -> Self {
        let g = inst.graph();
        let n = g.node_count();
        assert!(n <= 32);
        let to_mask = |vs: &[usize]| vs.iter().fold(0u32, |m, &v| m | 1 << v);
        let out: Vec<u32> = g.nodes().map(|v| to_mask(g.out_neighbors(v))).collect();
        let inn: Vec<u32> = g.nodes().map(|v| to_mask(g.in_neighbors(v))).collect();
        let desc = (0..n)
            .map(|v| {
                let mut m = 1u32 << v;
                loop {
                    let next = (0..n)
                        .filter(|&u| m >> u & 1 == 1)
                        .fold(m, |acc, u| acc | out[u]);
                    if next == m {
                        break m;
                    }
                    m = next;
                }
            })
            .collect();
        Masks {
            n,
            weights: inst.weights().to_vec(),
            budget: inst.budget(),
            out,
            inn,
            desc,
        }
    }

    pub fn weight(&self, mask: u32) -> u64 {
        (0..self.n)
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| self.weights[v])
            .sum()
    }

    pub fn set(&self, mask: u32) -> NodeSet {
        NodeSet::from_nodes(self.n, (0..self.n).filter(|&v| mask >> v & 1 == 1))
    }

    pub fn closed(&self, mask: u32) -> bool {
        (0..self.n).all(|v| mask >> v & 1 == 0 || self.out[v] & !mask == 0)
    }

    pub fn weakly_closed(&self, mask: u32) -> bool {
        (0..self.n).all(|v| mask >> v & 1 == 1 || self.inn[v] == 0 || self.inn[v] & !mask != 0)
    }

    fn weak_completion(&self, mut mask: u32) -> u32 {
        loop {
            let forced = (0..self.n)
                .filter(|&v| self.inn[v] != 0 && self.inn[v] & !mask == 0)
                .fold(0u32, |m, v| m | 1 << v);
            if forced & !mask == 0 {
                return mask;
            }
            mask |= forced;
        }
    }

    pub fn feasible(&self, mask: u32, kind: ProblemKind) -> bool {
        let closed = if kind.is_weak() {
            self.weakly_closed(mask)
        } else {
            self.closed(mask)
        };
        if !closed || self.weight(mask) > self.budget {
            return false;
        }
        if !kind.is_maximal() {
            return true;
        }
        (0..self.n).filter(|&x| mask >> x & 1 == 0).all(|x| {
            let grown = if kind.is_weak() {
                self.weak_completion(mask | 1 << x)
            } else {
                mask | self.desc[x]
            };
            self.weight(grown) > self.budget
        })
    }
}
