//! Integral min-cost flow with arc lower bounds.
//!
//! Lower bounds are removed by the usual excess/deficit transformation and
//! the remaining problem is solved by successive shortest paths with SPFA
//! (costs may be negative; the networks built in this crate are acyclic, so
//! no negative cycles arise). Capacities and flow values are integers and
//! the result is exact.

use std::collections::VecDeque;

/// A directed arc with integral capacity, lower bound and cost per unit.
#[derive(Debug, Clone)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub capacity: u64,
    pub lower: u64,
    pub cost: i64,
}

impl Arc {
    pub fn new(from: usize, to: usize, capacity: u64, lower: u64, cost: i64) -> Self {
        assert!(lower <= capacity, "lower bound exceeds capacity");
        Arc {
            from,
            to,
            capacity,
            lower,
            cost,
        }
    }
}

#[derive(Debug, Clone)]
pub struct FlowNetwork {
    pub num_nodes: usize,
    pub arcs: Vec<Arc>,
    pub source: usize,
    pub sink: usize,
}

impl FlowNetwork {
    pub fn new(num_nodes: usize, source: usize, sink: usize) -> Self {
        assert!(source != sink, "source and sink must differ");
        FlowNetwork {
            num_nodes,
            arcs: Vec::new(),
            source,
            sink,
        }
    }

    pub fn arc(&mut self, from: usize, to: usize, capacity: u64, lower: u64, cost: i64) {
        self.arcs.push(Arc::new(from, to, capacity, lower, cost));
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlowOutcome {
    /// Per-arc flows (aligned with `FlowNetwork::arcs`) and the total cost.
    Flow { arc_flows: Vec<u64>, cost: i64 },
    Infeasible,
}

/// Computes a minimum-cost flow of exactly `required` units from source to
/// sink, honoring all lower bounds.
pub fn min_cost_flow(net: &FlowNetwork, required: u64) -> FlowOutcome {
    // Excess/deficit induced by forcing every lower bound and the required
    // source-to-sink value.
    let mut excess: Vec<i64> = vec![0; net.num_nodes];
    let mut base_cost: i64 = 0;
    for arc in &net.arcs {
        excess[arc.to] += arc.lower as i64;
        excess[arc.from] -= arc.lower as i64;
        base_cost += arc.lower as i64 * arc.cost;
    }
    excess[net.source] += required as i64;
    excess[net.sink] -= required as i64;

    let super_source = net.num_nodes;
    let super_sink = net.num_nodes + 1;
    let mut graph = Residual::new(net.num_nodes + 2);
    let arc_slots: Vec<usize> = net
        .arcs
        .iter()
        .map(|arc| graph.add(arc.from, arc.to, arc.capacity - arc.lower, arc.cost))
        .collect();
    let mut demand: u64 = 0;
    for (node, &e) in excess.iter().enumerate() {
        if e > 0 {
            graph.add(super_source, node, e as u64, 0);
            demand += e as u64;
        } else if e < 0 {
            graph.add(node, super_sink, (-e) as u64, 0);
        }
    }

    let (sent, cost) = graph.successive_shortest_paths(super_source, super_sink);
    if sent < demand {
        return FlowOutcome::Infeasible;
    }
    let arc_flows: Vec<u64> = net
        .arcs
        .iter()
        .zip(&arc_slots)
        .map(|(arc, &slot)| arc.lower + graph.flow_on(slot))
        .collect();
    debug_assert!(conserves_flow(net, &arc_flows));
    FlowOutcome::Flow {
        arc_flows,
        cost: base_cost + cost,
    }
}

/// Residual graph in forward/backward edge-pair representation.
struct Residual {
    heads: Vec<Vec<usize>>, // node -> edge indices
    to: Vec<usize>,
    cap: Vec<u64>,
    cost: Vec<i64>,
}

impl Residual {
    fn new(num_nodes: usize) -> Self {
        Residual {
            heads: vec![Vec::new(); num_nodes],
            to: Vec::new(),
            cap: Vec::new(),
            cost: Vec::new(),
        }
    }

    /// Adds a forward edge and its residual twin; returns the forward index.
    fn add(&mut self, from: usize, to: usize, cap: u64, cost: i64) -> usize {
        let idx = self.to.len();
        self.heads[from].push(idx);
        self.to.push(to);
        self.cap.push(cap);
        self.cost.push(cost);
        self.heads[to].push(idx + 1);
        self.to.push(from);
        self.cap.push(0);
        self.cost.push(-cost);
        idx
    }

    fn flow_on(&self, forward_idx: usize) -> u64 {
        // Flow equals the residual capacity of the backward twin.
        self.cap[forward_idx ^ 1]
    }

    fn successive_shortest_paths(&mut self, source: usize, sink: usize) -> (u64, i64) {
        let mut total_flow: u64 = 0;
        let mut total_cost: i64 = 0;
        loop {
            // SPFA shortest path by cost.
            let n = self.heads.len();
            let mut dist = vec![i64::MAX; n];
            let mut in_queue = vec![false; n];
            let mut parent_edge = vec![usize::MAX; n];
            dist[source] = 0;
            let mut queue = VecDeque::new();
            queue.push_back(source);
            in_queue[source] = true;
            while let Some(u) = queue.pop_front() {
                in_queue[u] = false;
                for &e in &self.heads[u] {
                    if self.cap[e] == 0 {
                        continue;
                    }
                    let v = self.to[e];
                    let nd = dist[u] + self.cost[e];
                    if nd < dist[v] {
                        dist[v] = nd;
                        parent_edge[v] = e;
                        if !in_queue[v] {
                            queue.push_back(v);
                            in_queue[v] = true;
                        }
                    }
                }
            }
            if dist[sink] == i64::MAX {
                return (total_flow, total_cost);
            }
            // Bottleneck along the path.
            let mut bottleneck = u64::MAX;
            let mut node = sink;
            while node != source {
                let e = parent_edge[node];
                bottleneck = bottleneck.min(self.cap[e]);
                node = self.to[e ^ 1];
            }
            let mut node = sink;
            while node != source {
                let e = parent_edge[node];
                self.cap[e] -= bottleneck;
                self.cap[e ^ 1] += bottleneck;
                node = self.to[e ^ 1];
            }
            total_flow += bottleneck;
            total_cost += bottleneck as i64 * dist[sink];
        }
    }
}

/// Verifies conservation at every non-terminal node of a returned flow.
pub fn conserves_flow(net: &FlowNetwork, arc_flows: &[u64]) -> bool {
    let mut balance: Vec<i64> = vec![0; net.num_nodes];
    for (arc, &f) in net.arcs.iter().zip(arc_flows) {
        balance[arc.from] -= f as i64;
        balance[arc.to] += f as i64;
    }
    (0..net.num_nodes)
        .filter(|&v| v != net.source && v != net.sink)
        .all(|v| balance[v] == 0)
}
