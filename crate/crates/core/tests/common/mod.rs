//! Brute-force reference computations, written against a plain adjacency
//! table so that they share no code with the library.
#![allow(dead_code)]

use gemkit::ColoredGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gem {
    pub d: usize,
    pub adj: Vec<Vec<Option<usize>>>,
}

impl Gem {
    pub fn of(graph: &ColoredGraph) -> Gem {
        let d = graph.dimension();
        let mut adj = vec![vec![None; d + 1]; graph.num_vertices()];
        for (u, v, c) in graph.edges() {
            adj[u][c] = Some(v);
            adj[v][c] = Some(u);
        }
        Gem { d, adj }
    }

    pub fn from_edges(d: usize, n: usize, edges: &[(usize, usize, usize)]) -> Gem {
        let mut adj = vec![vec![None; d + 1]; n];
        for &(u, v, c) in edges {
            adj[u][c] = Some(v);
            adj[v][c] = Some(u);
        }
        Gem { d, adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        self.adj[v][self.d].is_none()
    }

    pub fn is_regular(&self) -> bool {
        (0..self.n()).all(|v| !self.is_boundary(v))
    }

    /// Connected components of the subgraph with the given colors, as sorted vertex lists.
    pub fn components(&self, colors: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &c in colors {
                    if let Some(w) = self.adj[v][c] {
                        if !seen[w] {
                            seen[w] = true;
                            stack.push(w);
                        }
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn count(&self, colors: &[usize]) -> i64 {
        self.components(colors).len() as i64
    }

    /// Components in which every vertex carries every color of the set.
    pub fn regular_count(&self, colors: &[usize]) -> i64 {
        self.components(colors)
            .iter()
            .filter(|comp| {
                comp.iter()
                    .all(|&v| colors.iter().all(|&c| self.adj[v][c].is_some()))
            })
            .count() as i64
    }

    pub fn f_vector(&self) -> Vec<i64> {
        let all: Vec<usize> = (0..=self.d).collect();
        (0..=self.d)
            .map(|h| {
                subsets(&all, h + 1)
                    .iter()
                    .map(|b| {
                        let rest: Vec<usize> =
                            all.iter().copied().filter(|c| !b.contains(c)).collect();
                        self.count(&rest)
                    })
                    .sum()
            })
            .collect()
    }

    pub fn chi(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(h, f)| if h % 2 == 0 { *f } else { -f })
            .sum()
    }

    /// Twice the closed-formula genus: `2 - 2ρ = Σ g_{ε_i ε_{i+1}} + (1-d)p`.
    pub fn rho_closed_twice(&self, eps: &[usize]) -> i64 {
        let d = self.d as i64;
        let p = self.n() as i64 / 2;
        let faces: i64 = (0..eps.len())
            .map(|i| self.count(&[eps[i], eps[(i + 1) % eps.len()]]))
            .sum();
        2 - faces - (1 - d) * p
    }

    /// The far end of the alternating path `v -c- · -d- · -c- ...` that stops at
    /// the first vertex without a `d`-edge.
    pub fn path_end(&self, v: usize, c: usize) -> usize {
        let mut cur = self.adj[v][c].expect("colors below d are perfect matchings");
        while let Some(next) = self.adj[cur][self.d] {
            cur = self.adj[next][c].expect("colors below d are perfect matchings");
        }
        cur
    }

    /// The boundary graph: boundary vertices (renumbered in increasing order),
    /// `c`-adjacent when joined by a `{c, d}`-path.
    pub fn boundary(&self) -> Gem {
        let verts: Vec<usize> = (0..self.n()).filter(|&v| self.is_boundary(v)).collect();
        let index = |v: usize| verts.iter().position(|&w| w == v).unwrap();
        let adj = verts
            .iter()
            .map(|&v| {
                (0..self.d)
                    .map(|c| Some(index(self.path_end(v, c))))
                    .collect()
            })
            .collect();
        Gem { d: self.d - 1, adj }
    }

    /// Number of boundary components.
    pub fn h(&self) -> i64 {
        if self.is_regular() {
            return 0;
        }
        let b = self.boundary();
        b.count(&(0..=b.d).collect::<Vec<_>>())
    }

    /// `∂g` of a color set (colors below `d`).
    pub fn boundary_count(&self, colors: &[usize]) -> i64 {
        self.boundary().count(colors)
    }

    /// Twice the boundary-formula genus for `eps` ending in `d`:
    /// `2 - 2ρ = Σ ġ_{ε_i ε_{i+1}} + (1-d)ṗ + (2-d)p̄ + ∂g_{ε_0 ε_{d-1}}`.
    pub fn rho_boundary_twice(&self, eps: &[usize]) -> i64 {
        assert_eq!(*eps.last().unwrap(), self.d);
        let d = self.d as i64;
        let boundary = (0..self.n()).filter(|&v| self.is_boundary(v)).count() as i64;
        let p_bar = boundary / 2;
        let p_dot = (self.n() as i64 - boundary) / 2;
        let faces: i64 = (0..eps.len())
            .map(|i| self.regular_count(&[eps[i], eps[(i + 1) % eps.len()]]))
            .sum();
        let closing = self.boundary_count(&[eps[0], eps[eps.len() - 2]]);
        2 - faces - (1 - d) * p_dot - (2 - d) * p_bar - closing
    }

    pub fn rho_twice(&self, eps: &[usize]) -> i64 {
        if self.is_regular() {
            self.rho_closed_twice(eps)
        } else {
            self.rho_boundary_twice(eps)
        }
    }

    /// Joins every boundary vertex to the far end of its `{c, d}`-path by a new `d`-edge.
    pub fn cap(&self, c: usize) -> Gem {
        let mut out = self.clone();
        for v in 0..self.n() {
            if self.is_boundary(v) {
                let w = self.path_end(v, c);
                out.adj[v][self.d] = Some(w);
                out.adj[w][self.d] = Some(v);
            }
        }
        out
    }

    /// Every component of the residue on three colors has genus zero:
    /// `2 - 2g = (bicolored cycles) - (vertices) / 2` per component.
    pub fn triple_residues_planar(&self, triple: [usize; 3]) -> bool {
        let [a, b, c] = triple;
        let pairs = [[a, b], [a, c], [b, c]];
        let cycles: Vec<Vec<Vec<usize>>> = pairs.iter().map(|pr| self.components(pr)).collect();
        self.components(&triple).iter().all(|comp| {
            let inside: i64 = cycles
                .iter()
                .map(|cs| cs.iter().filter(|cyc| comp.contains(&cyc[0])).count() as i64)
                .sum();
            inside - comp.len() as i64 / 2 == 2
        })
    }

    /// Every 3-colored residue of the boundary graph is a union of spheres.
    pub fn boundary_residues_planar(&self) -> bool {
        let b = self.boundary();
        subsets(&(0..self.d).collect::<Vec<_>>(), 3)
            .iter()
            .all(|t| b.triple_residues_planar([t[0], t[1], t[2]]))
    }

    /// Distinct components of `∂Γ_S` lie in distinct components of `Γ_{S ∪ {d}}`
    /// for every non-empty proper `S ⊂ {0..d-1}`.
    pub fn boundary_embeds(&self) -> bool {
        let verts: Vec<usize> = (0..self.n()).filter(|&v| self.is_boundary(v)).collect();
        let b = self.boundary();
        let below: Vec<usize> = (0..self.d).collect();
        (1..self.d).all(|k| {
            subsets(&below, k).into_iter().all(|kept| {
                let mut with_d = kept.clone();
                with_d.push(self.d);
                let outer = self.components(&with_d);
                let outer_of = |v: usize| outer.iter().position(|c| c.contains(&v)).unwrap();
                let mut images: Vec<usize> = b
                    .components(&kept)
                    .iter()
                    .map(|comp| {
                        let targets: Vec<usize> =
                            comp.iter().map(|&i| outer_of(verts[i])).collect();
                        assert!(targets.windows(2).all(|w| w[0] == w[1]));
                        targets[0]
                    })
                    .collect();
                let before = images.len();
                images.sort_unstable();
                images.dedup();
                images.len() == before
            })
        })
    }

    /// The subgraph on `verts` with the edges of `colors`, recolored by position
    /// in `colors` (so the last listed color becomes the top color).
    pub fn restrict(&self, verts: &[usize], colors: &[usize]) -> Gem {
        let index = |v: usize| verts.iter().position(|&w| w == v).unwrap();
        let adj = verts
            .iter()
            .map(|&v| colors.iter().map(|&c| self.adj[v][c].map(index)).collect())
            .collect();
        Gem {
            d: colors.len() - 1,
            adj,
        }
    }

    /// Some cyclic order gives genus zero (a sphere up to dimension 3).
    pub fn closed_genus_zero(&self) -> bool {
        cyclic_orders(self.d)
            .iter()
            .any(|e| self.rho_closed_twice(e) == 0)
    }

    /// Every vertex link is a sphere or a ball, so the complex is a manifold,
    /// possibly with boundary. A link with boundary counts as a ball when its
    /// boundary is a single sphere and coning it off gives a sphere.
    pub fn is_manifold(&self) -> bool {
        (0..=self.d).all(|c| {
            let colors: Vec<usize> = (0..=self.d).filter(|&x| x != c).collect();
            self.components(&colors).iter().all(|comp| {
                let link = self.restrict(comp, &colors);
                if link.is_regular() {
                    return link.closed_genus_zero();
                }
                let b = link.boundary();
                b.count(&(0..=b.d).collect::<Vec<_>>()) == 1
                    && b.closed_genus_zero()
                    && link.cap(0).closed_genus_zero()
            })
        })
    }

    /// A color-preserving bijection onto `other` exists (both connected).
    pub fn isomorphic(&self, other: &Gem) -> bool {
        if self.d != other.d || self.n() != other.n() {
            return false;
        }
        let n = self.n();
        'start: for image in 0..n {
            let mut map = vec![usize::MAX; n];
            let mut used = vec![false; n];
            map[0] = image;
            used[image] = true;
            let mut stack = vec![0];
            while let Some(v) = stack.pop() {
                for c in 0..=self.d {
                    match (self.adj[v][c], other.adj[map[v]][c]) {
                        (None, None) => {}
                        (Some(w), Some(x)) => {
                            if map[w] == usize::MAX {
                                if used[x] {
                                    continue 'start;
                                }
                                map[w] = x;
                                used[x] = true;
                                stack.push(w);
                            } else if map[w] != x {
                                continue 'start;
                            }
                        }
                        _ => continue 'start,
                    }
                }
            }
            return true;
        }
        false
    }
}

pub fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = subsets(&items[1..], k);
    for mut rest in subsets(&items[1..], k - 1) {
        rest.insert(0, items[0]);
        out.push(rest);
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// One representative `(ε_0, ..., ε_{d-1}, d)` with `ε_0 < ε_{d-1}` per cyclic
/// order up to reversal.
pub fn cyclic_orders(d: usize) -> Vec<Vec<usize>> {
    let base: Vec<usize> = (0..d).collect();
    permutations(&base)
        .into_iter()
        .filter(|p| p[0] < p[d - 1])
        .map(|mut p| {
            p.push(d);
            p
        })
        .collect()
}

/// `(ε_1, ε_3, ε_0, ε_2, 4)`.
pub fn partner(eps: &[usize]) -> Vec<usize> {
    vec![eps[1], eps[3], eps[0], eps[2], 4]
}

/// Formats a cyclic order the way the library displays it.
pub fn show(eps: &[usize]) -> String {
    let inner: Vec<String> = eps.iter().map(|c| c.to_string()).collect();
    format!("({})", inner.join(","))
}

/// S4_2, B4_2 and the 3-colored torus graph.
pub fn s4_2() -> ColoredGraph {
    let edges: Vec<_> = (0..=4).map(|c| (0, 1, c)).collect();
    ColoredGraph::validate(4, 2, &edges).unwrap()
}

pub fn b4_2() -> ColoredGraph {
    let edges: Vec<_> = (0..4).map(|c| (0, 1, c)).collect();
    ColoredGraph::validate(4, 2, &edges).unwrap()
}

pub fn k33() -> ColoredGraph {
    let mut edges = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            edges.push((j, 3 + (j + i) % 3, i));
        }
    }
    ColoredGraph::validate(2, 6, &edges).unwrap()
}

/// Rebuilds a library graph from the reference table; `None` if it is not a
/// valid (connected) gem.
pub fn try_graph(gem: &Gem) -> Option<ColoredGraph> {
    let mut edges = Vec::new();
    for (u, row) in gem.adj.iter().enumerate() {
        for (c, w) in row.iter().enumerate() {
            if let Some(w) = *w {
                if u < w {
                    edges.push((u, w, c));
                }
            }
        }
    }
    ColoredGraph::validate(gem.d, gem.n(), &edges).ok()
}
