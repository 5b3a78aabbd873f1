use std::collections::{HashSet, VecDeque};

use super::{Circuit, Gate, GateKind};

struct Names {
    taken: HashSet<String>,
}

impl Names {
    fn new(c: &Circuit) -> Self {
        Self {
            taken: c.gates().iter().map(|g| g.name.clone()).collect(),
        }
    }

    fn fresh(&mut self, base: &str, tag: &str) -> String {
        let mut k = 0usize;
        loop {
            let candidate = format!("{base}_{tag}{k}");
            if self.taken.insert(candidate.clone()) {
                return candidate;
            }
            k += 1;
        }
    }
}

/// Rewrites to AND/NOT with fan-out at most two, preserving the function.
///
/// `OR(a, b)` becomes `NOT(AND(NOT a, NOT b))`, the last gate keeping the
/// original name. A value with more than two uses gets a balanced tree of
/// `NOT(NOT(.))` buffers placed right after it. Circuits that are already
/// normalized come back unchanged.
pub fn normalize(c: &Circuit) -> Circuit {
    let mut names = Names::new(c);
    split_fanout(&expand_or(c, &mut names), &mut names)
}

fn expand_or(c: &Circuit, names: &mut Names) -> Circuit {
    let mut gates = Vec::with_capacity(c.gates().len());
    let mut map = Vec::with_capacity(c.gates().len());
    let push = |gates: &mut Vec<Gate>, name: String, kind| {
        gates.push(Gate { name, kind });
        gates.len() - 1
    };
    for g in c.gates() {
        let idx = match g.kind {
            GateKind::Or(a, b) => {
                let na = push(
                    &mut gates,
                    names.fresh(&g.name, "na"),
                    GateKind::Not(map[a]),
                );
                let nb = push(
                    &mut gates,
                    names.fresh(&g.name, "nb"),
                    GateKind::Not(map[b]),
                );
                let and = push(
                    &mut gates,
                    names.fresh(&g.name, "and"),
                    GateKind::And(na, nb),
                );
                push(&mut gates, g.name.clone(), GateKind::Not(and))
            }
            GateKind::And(a, b) => push(&mut gates, g.name.clone(), GateKind::And(map[a], map[b])),
            GateKind::Not(a) => push(&mut gates, g.name.clone(), GateKind::Not(map[a])),
            GateKind::Input => push(&mut gates, g.name.clone(), GateKind::Input),
        };
        map.push(idx);
    }
    Circuit::new(gates, map[c.output()]).expect("expansion preserves validity")
}

fn split_fanout(c: &Circuit, names: &mut Names) -> Circuit {
    let uses = c.use_counts();
    let mut gates: Vec<Gate> = Vec::with_capacity(c.gates().len());
    let mut map = Vec::with_capacity(c.gates().len());
    // Per source: the new-index feeding each of its uses, in use order.
    let mut slots: Vec<VecDeque<usize>> = vec![VecDeque::new(); c.gates().len()];

    for (i, g) in c.gates().iter().enumerate() {
        let mut take = |o: usize| slots[o].pop_front().unwrap_or(map[o]);
        let kind = match g.kind {
            GateKind::And(a, b) => {
                let a = take(a);
                GateKind::And(a, take(b))
            }
            GateKind::Not(a) => GateKind::Not(take(a)),
            other => other,
        };
        gates.push(Gate {
            name: g.name.clone(),
            kind,
        });
        let idx = gates.len() - 1;
        map.push(idx);
        if uses[i] > 2 {
            let mut out = VecDeque::new();
            fan(&mut gates, names, &g.name, idx, uses[i], &mut out);
            slots[i] = out;
        }
    }
    Circuit::new(gates, map[c.output()]).expect("splitting preserves validity")
}

/// Appends buffers so that `k` slots read the value of `src`, each node
/// feeding at most two.
fn fan(
    gates: &mut Vec<Gate>,
    names: &mut Names,
    base: &str,
    src: usize,
    k: usize,
    out: &mut VecDeque<usize>,
) {
    if k <= 2 {
        out.extend(std::iter::repeat_n(src, k));
        return;
    }
    for part in [k.div_ceil(2), k / 2] {
        if part == 1 {
            out.push_back(src);
            continue;
        }
        gates.push(Gate {
            name: names.fresh(base, "i"),
            kind: GateKind::Not(src),
        });
        gates.push(Gate {
            name: names.fresh(base, "b"),
            kind: GateKind::Not(gates.len() - 1),
        });
        fan(gates, names, base, gates.len() - 1, part, out);
    }
}
