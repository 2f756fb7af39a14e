use std::collections::BTreeSet;

use serde::Serialize;

use super::Graph;

/// One biconnected component, given by its edge ids (ascending) and its
/// vertices (ascending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiconnectedComponent {
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl BiconnectedComponent {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }
}

/// Biconnected components of a connected graph, ordered by smallest edge id.
///
/// Single-edge components are exactly the bridges.
pub fn blocks(g: &Graph) -> Vec<BiconnectedComponent> {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut out = Vec::new();

    struct Frame {
        v: usize,
        parent_edge: usize,
        next: usize,
    }

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut stack = vec![Frame {
            v: root,
            parent_edge: UNSEEN,
            next: 0,
        }];
        while let Some(top) = stack.last_mut() {
            let v = top.v;
            if let Some(&(w, e)) = g.incident(v).get(top.next) {
                top.next += 1;
                if e == top.parent_edge {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push(Frame {
                        v: w,
                        parent_edge: e,
                        next: 0,
                    });
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                let done = stack.pop().expect("non-empty");
                if let Some(parent) = stack.last() {
                    let u = parent.v;
                    low[u] = low[u].min(low[done.v]);
                    if low[done.v] >= disc[u] {
                        let mut edges = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            edges.push(e);
                            if e == done.parent_edge {
                                break;
                            }
                        }
                        out.push(component(g, edges));
                    }
                }
            }
        }
    }
    out.sort_by_key(|c| c.edges[0]);
    out
}

fn component(g: &Graph, mut edges: Vec<usize>) -> BiconnectedComponent {
    edges.sort_unstable();
    let vertices: BTreeSet<usize> = edges
        .iter()
        .flat_map(|&e| {
            let (u, v) = g.edge(e);
            [u, v]
        })
        .collect();
    BiconnectedComponent {
        edges,
        vertices: vertices.into_iter().collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    Bridge,
    Cycle,
}

/// A block of a cactus: a bridge or a simple cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub kind: BlockKind,
    /// Edge ids, ascending.
    pub edge_ids: Vec<usize>,
    /// For cycles: vertices in traversal order, starting at the lowest label
    /// and continuing toward its lower-labelled cycle neighbor. For bridges:
    /// the two endpoints, smaller first.
    pub cycle_order: Vec<usize>,
}

impl Block {
    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }

    pub fn is_cycle(&self) -> bool {
        self.kind == BlockKind::Cycle
    }

    /// Edge ids in traversal order: entry `i` joins `cycle_order[i]` and
    /// `cycle_order[i + 1]` (wrapping).
    pub fn cycle_edges(&self, g: &Graph) -> Vec<usize> {
        let k = self.cycle_order.len();
        if self.kind == BlockKind::Bridge {
            return self.edge_ids.clone();
        }
        (0..k)
            .map(|i| {
                g.edge_id(self.cycle_order[i], self.cycle_order[(i + 1) % k])
                    .expect("consecutive cycle vertices are adjacent")
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CactusDecomposition {
    pub blocks: Vec<Block>,
    pub edge_to_block: Vec<usize>,
}

impl CactusDecomposition {
    pub fn block_of(&self, edge: usize) -> &Block {
        &self.blocks[self.edge_to_block[edge]]
    }

    pub fn bridge_count(&self) -> usize {
        self.blocks
            .iter()
            .filter(|b| b.kind == BlockKind::Bridge)
            .count()
    }
}

/// Witness that a graph is not a cactus: a block with more edges than
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a cactus: block on {} vertices has {} edges", .vertices.len(), .edges.len())]
pub struct NotCactus {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

pub fn cactus_decomposition(g: &Graph) -> Result<CactusDecomposition, NotCactus> {
    let comps = blocks(g);
    let mut out = Vec::with_capacity(comps.len());
    let mut edge_to_block = vec![0; g.m()];
    for (id, comp) in comps.into_iter().enumerate() {
        for &e in &comp.edges {
            edge_to_block[e] = id;
        }
        let block = if comp.is_bridge() {
            let (u, v) = g.edge(comp.edges[0]);
            Block {
                kind: BlockKind::Bridge,
                edge_ids: comp.edges,
                cycle_order: vec![u, v],
            }
        } else if comp.edges.len() == comp.vertices.len() {
            let order = cycle_order(g, &comp);
            Block {
                kind: BlockKind::Cycle,
                edge_ids: comp.edges,
                cycle_order: order,
            }
        } else {
            return Err(NotCactus {
                vertices: comp.vertices,
                edges: comp.edges,
            });
        };
        out.push(block);
    }
    Ok(CactusDecomposition {
        blocks: out,
        edge_to_block,
    })
}

/// Traversal order of a component known to be a simple cycle.
fn cycle_order(g: &Graph, comp: &BiconnectedComponent) -> Vec<usize> {
    let in_block = |e: usize| comp.edges.binary_search(&e).is_ok();
    let block_neighbors = |v: usize| -> Vec<usize> {
        g.incident(v)
            .iter()
            .filter(|&&(_, e)| in_block(e))
            .map(|&(w, _)| w)
            .collect()
    };
    let start = comp.vertices[0];
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = block_neighbors(start)[0];
    while cur != start {
        order.push(cur);
        let next = block_neighbors(cur)
            .into_iter()
            .find(|&w| w != prev)
            .expect("cycle vertices have two block neighbors");
        prev = cur;
        cur = next;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    }

    #[test]
    fn path_has_only_bridges() {
        let bs = blocks(&graph(4, &[(0, 1), (1, 2), (2, 3)]));
        assert_eq!(bs.len(), 3);
        assert!(bs.iter().all(BiconnectedComponent::is_bridge));
    }

    #[test]
    fn cycle_is_one_block() {
        let bs = blocks(&graph(6, &cycle_edges(6)));
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].edges.len(), 6);
    }

    #[test]
    fn bowtie_has_two_cycle_blocks() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        let cd = cactus_decomposition(&g).unwrap();
        assert_eq!(cd.blocks.len(), 2);
        assert!(cd.blocks.iter().all(Block::is_cycle));
        assert_eq!(cd.blocks[1].cycle_order, vec![2, 3, 4]);
    }

    #[test]
    fn cycle_with_pendant() {
        let mut edges = cycle_edges(5);
        edges.push((2, 5));
        let cd = cactus_decomposition(&graph(6, &edges)).unwrap();
        assert_eq!(cd.blocks.len(), 2);
        assert_eq!(cd.bridge_count(), 1);
        assert_eq!(cd.block_of(5).kind, BlockKind::Bridge);
        assert_eq!(cd.blocks[0].cycle_order, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn cycle_order_heads_to_lower_neighbor() {
        // cycle 3-7-1-5-3: lowest vertex 1, neighbors 5 and 7
        let g = graph(
            8,
            &[
                (3, 7),
                (7, 1),
                (1, 5),
                (5, 3),
                (0, 1),
                (2, 3),
                (4, 5),
                (6, 7),
            ],
        );
        let cd = cactus_decomposition(&g).unwrap();
        let cyc = cd.blocks.iter().find(|b| b.is_cycle()).unwrap();
        assert_eq!(cyc.cycle_order, vec![1, 5, 3, 7]);
        let es = cyc.cycle_edges(&g);
        assert_eq!(es, vec![2, 3, 0, 1]);
    }

    #[test]
    fn two_cycles_joined_by_bridge() {
        let g = graph(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 3),
            ],
        );
        let cd = cactus_decomposition(&g).unwrap();
        let cycles = cd.blocks.iter().filter(|b| b.is_cycle()).count();
        assert_eq!((cycles, cd.bridge_count()), (2, 1));
    }

    #[test]
    fn k4_is_not_a_cactus() {
        let g = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let err = cactus_decomposition(&g).unwrap_err();
        assert_eq!((err.vertices.len(), err.edges.len()), (4, 6));
    }
}
