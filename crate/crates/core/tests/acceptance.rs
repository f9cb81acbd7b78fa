//! Acceptance suite. Every test prints exactly one `ACCEPTANCE PASS/FAIL`
//! line (run with `--nocapture` to see them live); bounds and side conditions
//! are asserted exactly, with the brute-force oracle as the referee.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dichroma::colorings::{
    color_addsink, color_locally_complete, color_p111_traced, color_w3minus, color_w3plus,
    find_in_module, layer_decompose, HeroOracle,
};
use dichroma::digraph::{Digraph, Vertex, VertexSet};
use dichroma::generators::{named, c4_blowup, random_in_class, GenConfig};
use dichroma::oracle;
use dichroma::patterns::{self, ClassSpec, Pattern};

fn criterion(name: &str, run: impl FnOnce() -> Result<String, String>) {
    match run() {
        Ok(detail) => println!("ACCEPTANCE PASS {name} ({detail})"),
        Err(reason) => {
            println!("ACCEPTANCE FAIL {name}: {reason}");
            panic!("{name}: {reason}");
        }
    }
}

/// Seeded member stream: sizes cycle over 4..=max_n, densities over four
/// levels, one seed per instance.
fn members(spec: &ClassSpec, count: usize, max_n: u32, seed_base: u64) -> Vec<Digraph> {
    let densities = [0.15, 0.25, 0.35, 0.5];
    (0..count)
        .map(|i| {
            let n = 4 + (i as u32 % (max_n - 3));
            let p = densities[i % densities.len()];
            let cfg = GenConfig::new(n, p, seed_base + i as u64, 30).expect("valid config");
            random_in_class(&cfg, spec)
        })
        .collect()
}

fn triangle_free_members() -> Vec<Digraph> {
    members(&ClassSpec::triangle_free_out_tournament(), 500, 14, 10_000)
}

fn out_transitive_members() -> Vec<Digraph> {
    members(&ClassSpec::out_transitive(), 200, 12, 20_000)
}

fn sink_wheel_free_members() -> Vec<Digraph> {
    members(&ClassSpec::sink_wheel_free(), 300, 14, 30_000)
}

#[test]
fn criterion_1_triangle_free_two_coloring() {
    criterion("1 two colors for triangle-free members, tight on the 4-cycle", || {
        let mut colored = 0usize;
        for (i, d) in triangle_free_members().iter().enumerate() {
            let anchor = d.min_vertex().expect("members are nonempty");
            let c = color_w3plus(d, anchor).map_err(|e| format!("instance {i}: {e}"))?;
            if c.palette_size() != 2 {
                return Err(format!("instance {i}: palette {}", c.palette_size()));
            }
            if oracle::is_valid_acyclic_coloring(d, &c) != Ok(true) {
                return Err(format!("instance {i}: invalid coloring"));
            }
            colored += 1;
        }
        let c4 = named("cycle", Some(4)).expect("c4");
        let chi = oracle::dichromatic_number(&c4).map_err(|e| e.to_string())?.chi;
        if chi != 2 {
            return Err(format!("chi(C4) = {chi}, expected 2"));
        }
        Ok(format!("{colored} members 2-colored, chi(C4) = 2"))
    });
}

#[test]
fn criterion_2_anchored_out_neighborhood_monochromatic() {
    criterion("2 anchored closed out-neighborhoods are monochromatic", || {
        let mut checks = 0usize;
        for (i, d) in out_transitive_members().iter().enumerate() {
            for v in d.vertices().collect::<Vec<_>>() {
                let c = color_w3plus(d, v).map_err(|e| format!("instance {i} at {v}: {e}"))?;
                if c.palette_size() != 2 || oracle::is_valid_acyclic_coloring(d, &c) != Ok(true) {
                    return Err(format!("instance {i} at {v}: invalid or overwide"));
                }
                for &u in d.outs(v) {
                    if c.color(u) != c.color(v) {
                        return Err(format!(
                            "instance {i}: c({u}) = {:?} differs from c({v}) = {:?}",
                            c.color(u),
                            c.color(v)
                        ));
                    }
                }
                checks += 1;
            }
        }
        Ok(format!("{checks} anchored colorings verified"))
    });
}

#[test]
fn criterion_3_four_coloring_constraints() {
    criterion("3 anchored four-coloring satisfies all color constraints", || {
        let mut checks = 0usize;
        for (i, d) in sink_wheel_free_members().iter().enumerate() {
            for (u, v) in d.arcs().collect::<Vec<_>>() {
                let c =
                    color_w3minus(d, (u, v)).map_err(|e| format!("instance {i} at ({u},{v}): {e}"))?;
                if c.palette_size() != 4 || oracle::is_valid_acyclic_coloring(d, &c) != Ok(true) {
                    return Err(format!("instance {i} at ({u},{v}): invalid or overwide"));
                }
                if c.color(u) != Some(1) {
                    return Err(format!("instance {i} at ({u},{v}): c(u) != 1"));
                }
                if c.color(v) != Some(1) {
                    return Err(format!("instance {i} at ({u},{v}): c(v) != 1"));
                }
                for &x in d.outs(u) {
                    if !d.outs(v).contains(&x) && c.color(x) != Some(1) {
                        return Err(format!(
                            "instance {i} at ({u},{v}): c({x}) != 1 on N+(u) \\ N+(v)"
                        ));
                    }
                }
                for &x in d.outs(v) {
                    if !matches!(c.color(x), Some(1) | Some(2)) {
                        return Err(format!(
                            "instance {i} at ({u},{v}): c({x}) outside {{1,2}} on N+(v)"
                        ));
                    }
                }
                checks += 1;
            }
        }
        Ok(format!("{checks} anchored colorings verified"))
    });
}

#[test]
fn criterion_4_layered_two_coloring() {
    criterion("4 layered two-coloring with independent layers, tight on the 5-cycle", || {
        let spec = ClassSpec::alternating_path_free();
        let mut layer_checks = 0usize;
        for (i, d) in members(&spec, 300, 14, 40_000).iter().enumerate() {
            let (c, rounds) =
                color_p111_traced(d).map_err(|e| format!("instance {i}: {e}"))?;
            if c.palette_size() != 2 || oracle::is_valid_acyclic_coloring(d, &c) != Ok(true) {
                return Err(format!("instance {i}: invalid or overwide"));
            }
            // Replay the rounds and audit every layer of every call.
            let mut rest = d.clone();
            for round in &rounds {
                let root = rest.min_vertex().expect("round on nonempty remainder");
                if round.root != root {
                    return Err(format!("instance {i}: root {} != {root}", round.root));
                }
                let again = layer_decompose(&rest, root).map_err(|e| e.to_string())?;
                if again != *round {
                    return Err(format!("instance {i}: decomposition replay mismatch"));
                }
                for layer in &round.layers {
                    for &a in layer {
                        if d.outs(a).intersection(layer).next().is_some() {
                            return Err(format!("instance {i}: layer {layer:?} not independent"));
                        }
                    }
                    layer_checks += 1;
                }
                rest = rest.delete(&round.union()).map_err(|e| e.to_string())?;
            }
            if !rest.is_empty() {
                return Err(format!("instance {i}: rounds did not exhaust the digraph"));
            }
        }
        let c5 = named("cycle", Some(5)).expect("c5");
        let chi = oracle::dichromatic_number(&c5).map_err(|e| e.to_string())?.chi;
        if chi != 2 {
            return Err(format!("chi(C5) = {chi}, expected 2"));
        }
        Ok(format!("{layer_checks} layers independent, chi(C5) = 2"))
    });
}

#[test]
fn criterion_5_sink_extension_bound() {
    criterion("5 dominated-sink extension stays within 17 colors", || {
        let sub = HeroOracle::triangle_two_coloring();
        let mut colored = 0usize;
        for (i, d) in members(&ClassSpec::sink_wheel_free(), 200, 14, 50_000)
            .iter()
            .enumerate()
        {
            let c = color_addsink(d, &sub).map_err(|e| format!("instance {i}: {e}"))?;
            if c.palette_size() > 17 {
                return Err(format!("instance {i}: palette {}", c.palette_size()));
            }
            if oracle::is_valid_acyclic_coloring(d, &c) != Ok(true) {
                return Err(format!("instance {i}: invalid coloring"));
            }
            colored += 1;
        }
        Ok(format!("{colored} members within 3(2+1)+3*2+2 = 17 colors"))
    });
}

#[test]
fn criterion_6_locally_complete_doubled_palette() {
    criterion("6 locally complete members stay within twice the tournament bound", || {
        let hero = Pattern::trans_tour(4).expect("tt4");
        let sub = HeroOracle::brute_force(hero.clone(), 3, 12);
        let spec = ClassSpec::locally_complete(hero);
        let mut colored = 0usize;
        for (i, d) in members(&spec, 100, 12, 60_000).iter().enumerate() {
            let c = color_locally_complete(d, &sub).map_err(|e| format!("instance {i}: {e}"))?;
            if c.palette_size() > 6 {
                return Err(format!("instance {i}: palette {}", c.palette_size()));
            }
            if oracle::is_valid_acyclic_coloring(d, &c) != Ok(true) {
                return Err(format!("instance {i}: invalid coloring"));
            }
            colored += 1;
        }
        Ok(format!("{colored} members within 2*3 = 6 colors"))
    });
}

#[test]
fn criterion_7_blowup_has_dichromatic_number_three() {
    criterion("7 four-cycle blow-up: class member with dichromatic number 3", || {
        let d = c4_blowup();
        let spec = ClassSpec::new(vec![
            Pattern::digon(),
            Pattern::s2_plus(),
            Pattern::k4_strong(),
        ])
        .expect("spec");
        patterns::ensure_in_class(&d, &spec).map_err(|e| e.to_string())?;
        let result = oracle::dichromatic_number(&d).map_err(|e| e.to_string())?;
        if result.chi != 3 {
            return Err(format!("chi = {}, expected 3", result.chi));
        }
        if oracle::is_valid_acyclic_coloring(&d, &result.witness) != Ok(true) {
            return Err("oracle witness is invalid".into());
        }
        Ok(format!(
            "n = {}, m = {}, chi = 3 with verified witness",
            d.vertex_count(),
            d.arc_count()
        ))
    });
}

/// Structural facts checked by criterion 8 on one class member.
fn lemma_suite(d: &Digraph, generic_recheck: bool) -> Result<usize, String> {
    let mut checks = 0usize;
    let f = patterns::build_f(d).map_err(|e| format!("functional digraph: {e}"))?;

    // Containment along functional arcs.
    for (x, y) in f.arcs() {
        let mut closed = d.outs(y).clone();
        closed.insert(y);
        if !d.outs(x).is_subset(&closed) {
            return Err(format!("N+({x}) leaves the closed out-neighborhood of {y}"));
        }
        checks += 1;
    }

    // Containment along every functional dipath (small members only).
    if d.vertex_count() <= 10 {
        for start in d.vertices() {
            let mut walk = vec![start];
            let mut seen = VertexSet::from([start]);
            while let Some(next) = f.f_arc(*walk.last().expect("nonempty")) {
                if !seen.insert(next) {
                    break;
                }
                walk.push(next);
                let interior: VertexSet = walk[1..].iter().copied().collect();
                let head = *walk.last().expect("nonempty");
                let reduced: VertexSet = d.outs(start).difference(&interior).copied().collect();
                if !reduced.is_subset(d.outs(head)) {
                    return Err(format!(
                        "dipath {walk:?}: N+({start}) minus interior leaves N+({head})"
                    ));
                }
                checks += 1;
            }
        }
    }

    // Functional cycles inside in-neighborhoods are out-modules, and the
    // in-neighborhood module search yields verified certificates whose
    // contractions and two-step sets behave.
    for v in d.vertices().collect::<Vec<_>>() {
        let ins = d.ins(v);
        if ins.is_empty() {
            continue;
        }
        let direct_hit = ins
            .iter()
            .any(|&w| f.f_arc(w) == Some(v));
        if !direct_hit {
            let cycle = patterns::find_f_cycle(d, ins)
                .map_err(|e| format!("cycle search in N-({v}): {e}"))?;
            let cycle_set: VertexSet = cycle.into_iter().collect();
            if !patterns::is_out_module(d, &cycle_set).map_err(|e| e.to_string())? {
                return Err(format!("functional cycle {cycle_set:?} is not an out-module"));
            }
            checks += 1;
        }

        let cert = find_in_module(d, v).map_err(|e| format!("module search at {v}: {e}"))?;
        cert.verify(d).map_err(|e| format!("certificate at {v}: {e}"))?;
        checks += 1;

        // Contraction closure.
        let contracted = d
            .contract(&cert.module)
            .map_err(|e| e.to_string())?
            .result;
        if !(patterns::is_oriented(&contracted)
            && patterns::out_neighborhoods_transitive(&contracted))
        {
            return Err(format!("contraction of {:?} left the class", cert.module));
        }
        if generic_recheck
            && !patterns::in_class(&contracted, &ClassSpec::out_transitive())
        {
            return Err(format!(
                "contraction of {:?} left the class (matcher)",
                cert.module
            ));
        }
        checks += 1;

        // Two-step sets induce transitive tournaments.
        let two_step = patterns::two_step_set(d, &cert.module, v).map_err(|e| e.to_string())?;
        if !two_step.is_empty()
            && !patterns::is_transitive_tournament(d, &two_step).map_err(|e| e.to_string())?
        {
            return Err(format!("two-step set {two_step:?} at {v} is not transitive"));
        }
        checks += 1;
    }

    // Arc-addition closure.
    for (x, y) in f.arcs() {
        for &z in d.outs(y) {
            if z == x || d.has_arc(x, z) || d.has_arc(z, x) {
                continue;
            }
            let extended = d.add_arc(x, z).map_err(|e| e.to_string())?;
            if !(patterns::is_oriented(&extended)
                && patterns::out_neighborhoods_transitive(&extended))
            {
                return Err(format!("adding ({x},{z}) left the class"));
            }
            if generic_recheck && !patterns::in_class(&extended, &ClassSpec::out_transitive()) {
                return Err(format!("adding ({x},{z}) left the class (matcher)"));
            }
            checks += 1;
        }
    }
    Ok(checks)
}

#[test]
fn criterion_8_structural_lemma_suite() {
    criterion("8 structural claims and lemmas hold on every generated member", || {
        let mut applicable = 0usize;
        let mut checks = 0usize;
        let stream = triangle_free_members()
            .into_iter()
            .chain(out_transitive_members())
            .chain(sink_wheel_free_members());
        for (i, d) in stream.enumerate() {
            // The statements quantify over members with transitive
            // out-neighborhoods; instances outside (possible in the third
            // stream) satisfy them vacuously.
            if !(patterns::is_oriented(&d) && patterns::out_neighborhoods_transitive(&d)) {
                continue;
            }
            applicable += 1;
            checks += lemma_suite(&d, i % 25 == 0).map_err(|e| format!("instance {i}: {e}"))?;
        }
        if applicable < 700 {
            return Err(format!("only {applicable} applicable instances"));
        }
        Ok(format!("{checks} checks over {applicable} members, zero violations"))
    });
}

#[test]
fn criterion_9_matcher_and_oracle_consistency() {
    criterion("9 matcher/counter agree everywhere; chi is componentwise", || {
        let catalog = Pattern::catalog();
        let mut agreement_checks = 0usize;

        let mut audit = |d: &Digraph| -> Result<(), String> {
            for pattern in &catalog {
                let found = patterns::find_induced(d, pattern);
                let count = oracle::count_induced(d, pattern);
                if found.is_some() != (count > 0) {
                    return Err(format!(
                        "pattern {} disagreement on {:?}",
                        pattern.name(),
                        d.arcs().collect::<Vec<_>>()
                    ));
                }
                if let Some(e) = found {
                    if !e.verify(pattern, d) {
                        return Err(format!("embedding for {} fails to verify", pattern.name()));
                    }
                }
                agreement_checks += 1;
            }
            let chi = oracle::dichromatic_number(d).map_err(|e| e.to_string())?.chi;
            let component_max = d
                .strong_components()
                .into_iter()
                .map(|part| {
                    oracle::dichromatic_number(&d.induced(&part).expect("component"))
                        .expect("within limit")
                        .chi
                })
                .max()
                .unwrap_or(0);
            if chi != component_max {
                return Err(format!("chi {chi} != componentwise max {component_max}"));
            }
            Ok(())
        };

        // Every labeled digraph on up to three vertices.
        for n in 0u32..=3 {
            let slots: Vec<(Vertex, Vertex)> = (0..n)
                .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..(1 << slots.len()) {
                let mut d = Digraph::with_vertices(n);
                for (bit, &(u, v)) in slots.iter().enumerate() {
                    if mask & (1 << bit) != 0 {
                        d.insert_arc(u, v).expect("u != v");
                    }
                }
                audit(&d)?;
            }
        }

        // Seeded random digraphs, digons allowed.
        let mut rng = ChaCha8Rng::seed_from_u64(90_000);
        for i in 0..500 {
            let n = 4 + (i % 3) as u32;
            let mut d = Digraph::with_vertices(n);
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.random::<f64>() < 0.3 {
                        d.insert_arc(u, v).expect("u != v");
                    }
                }
            }
            audit(&d)?;
        }
        Ok(format!("{agreement_checks} pattern agreements, componentwise chi throughout"))
    });
}

/// The generators must put cyclic structure in front of the coloring
/// recursions often enough to exercise their nontrivial branches.
#[test]
fn generator_coverage_pressure() {
    criterion("coverage: cyclic members appear across 1000 seeds", || {
        let spec = ClassSpec::out_transitive();
        let mut cyclic = 0usize;
        for seed in 0..1000 {
            let cfg = GenConfig::new(12, 0.3, seed, 30).expect("valid config");
            let d = random_in_class(&cfg, &spec);
            if !d.is_acyclic() {
                cyclic += 1;
            }
        }
        if cyclic == 0 {
            return Err("no cyclic instance among 1000 seeds".into());
        }
        Ok(format!("{cyclic} of 1000 members contain a directed cycle"))
    });
}

/// Bounds produced by the constructive algorithms are never beaten by the
/// exact oracle: chi is a lower bound for every palette.
#[test]
fn oracle_lower_bounds_constructive_palettes() {
    criterion("oracle chi never exceeds a constructive palette", || {
        let mut compared = 0usize;
        for (i, d) in members(&ClassSpec::out_transitive(), 40, 9, 70_000)
            .iter()
            .enumerate()
        {
            let anchor = d.min_vertex().expect("nonempty");
            let c = color_w3plus(d, anchor).map_err(|e| format!("instance {i}: {e}"))?;
            let chi = oracle::dichromatic_number(d).map_err(|e| e.to_string())?.chi;
            if chi > c.palette_size() {
                return Err(format!(
                    "instance {i}: chi {chi} beats palette {}",
                    c.palette_size()
                ));
            }
            let used: BTreeSet<u32> = c.colors_used();
            if (used.len() as u32) < chi {
                return Err(format!("instance {i}: {} colors used but chi is {chi}", used.len()));
            }
            compared += 1;
        }
        Ok(format!("{compared} members compared against the oracle"))
    });
}
