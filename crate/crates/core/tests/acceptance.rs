//! End-to-end acceptance suite. Runs every criterion in sequence (wall-clock
//! limits are only meaningful without parallel tests), prints one line per
//! criterion and exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use tcoalg::algebra::Component;
use tcoalg::constructions::{double, extension_generator, mirror, ribbon_extension};
use tcoalg::demos::{self, constant_kz3_z2, group_algebra, sweedler, trivial};
use tcoalg::quasi::{drinfeld_elements, ribbon_square};
use tcoalg::rep::*;
use tcoalg::rib::*;
use tcoalg::yd::*;
use tcoalg::*;

type Outcome = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn failing(rep: &Report) -> String {
    let ids: Vec<String> = rep.checks().into_iter().filter(|c| rep.failed(c)).collect();
    ids.join(",")
}

fn clean(rep: &Report, what: &str) -> std::result::Result<usize, String> {
    if rep.is_clean() {
        Ok(rep.entries.len())
    } else {
        Err(format!("{what}: failing {}", failing(rep)))
    }
}

fn quasi_fixtures() -> Vec<(&'static str, TCoalg)> {
    vec![
        ("trivial", trivial(&FiniteGroup::cyclic(2))),
        ("group_algebra2", group_algebra(2)),
        ("sweedler", sweedler()),
        ("double_kz2", double(&group_algebra(2)).unwrap()),
        ("double_sweedler", double(&sweedler()).unwrap()),
        ("double_constant", double(&constant_kz3_z2()).unwrap()),
    ]
}

/// A few modules per grade: trivial, regular, and for small components the
/// sign-type characters.
fn module_sample(h: &TCoalg) -> Vec<HModule> {
    let mut out = vec![trivial_module(h)];
    for a in h.group.elements() {
        out.push(regular_module(h, a));
        if h.dim(a) <= 4 {
            out.extend(small_characters(h, a).into_iter().take(3));
        } else if h.dim(a) <= 16 {
            out.extend(regular_submodules(h, a).into_iter().filter(|m| m.dim <= 8).take(3));
        }
    }
    out
}

/// The sampled objects of `Rep(RT(D̄(k[Z/2])))`.
fn rt_sample(rt: &TCoalg) -> Vec<HModule> {
    let mut s = vec![trivial_module(rt), regular_module(rt, 0)];
    s.extend(small_characters(rt, 0));
    s.extend(regular_submodules(rt, 0).into_iter().filter(|m| m.dim <= 4));
    s
}

fn bump(s: &Scalar) -> Scalar {
    s + &Scalar::one()
}

fn bump_matrix(m: &Matrix, r: usize, c: usize) -> Matrix {
    let mut m = m.clone();
    let v = bump(m.get(r, c));
    m.set(r, c, v);
    m
}

/// Every single-entry perturbation of the structure constants of `h`.
fn mutations(h: &TCoalg) -> Vec<(String, TCoalg)> {
    let mut out = Vec::new();
    let fam = |name: &str, ms: &[Matrix], out: &mut Vec<(String, TCoalg)>, set: &dyn Fn(&mut TCoalg, usize, Matrix)| {
        for (i, m) in ms.iter().enumerate() {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    let mut x = h.clone();
                    set(&mut x, i, bump_matrix(m, r, c));
                    out.push((format!("{name}[{i}]({r},{c})"), x));
                }
            }
        }
    };
    fam("comul", &h.comul, &mut out, &|x, i, m| x.comul[i] = m);
    fam("antipode", &h.antipode, &mut out, &|x, i, m| x.antipode[i] = m);
    fam("conj", &h.conj, &mut out, &|x, i, m| x.conj[i] = m);
    for k in 0..h.counit.len() {
        let mut x = h.clone();
        x.counit[k] = bump(&x.counit[k]);
        out.push((format!("counit[{k}]"), x));
    }
    for (a, comp) in h.components.iter().enumerate() {
        let d = comp.dim();
        for idx in 0..d * d * d {
            let (i, j, k) = (idx / (d * d), (idx / d) % d, idx % d);
            let mut t = comp.structure().clone();
            t.set(i, j, k, bump(t.get(i, j, k)));
            let mut x = h.clone();
            x.components[a] = Component::new(t, comp.unit().clone()).unwrap();
            out.push((format!("mul[{a}]({i},{j},{k})"), x));
        }
        for k in 0..d {
            let mut u = comp.unit().clone();
            u[k] = bump(&u[k]);
            let mut x = h.clone();
            x.components[a] = Component::new(comp.structure().clone(), u).unwrap();
            out.push((format!("unit[{a}][{k}]"), x));
        }
    }
    out
}

fn c1_axiom_soundness() -> Outcome {
    let mut checks = 0;
    let mut muts = 0;
    for name in ["trivial", "group_algebra2", "group_algebra3", "sweedler", "constant"] {
        let h = demos::demo(name).unwrap();
        checks += clean(&validate_tcoalg(&h), name)?;
        for (what, x) in mutations(&h) {
            muts += 1;
            ensure!(!validate_tcoalg(&x).is_clean(), "{name}: mutation {what} went unnoticed");
        }
        if let Some(r) = &h.rmatrix {
            for (i, m) in r.all().iter().enumerate() {
                for (row, col) in (0..m.rows()).flat_map(|p| (0..m.cols()).map(move |q| (p, q))) {
                    let mut fam = r.all().to_vec();
                    fam[i] = bump_matrix(m, row, col);
                    let x = h.clone().with_rmatrix(RMatrix::new(fam, &h)).unwrap();
                    muts += 1;
                    ensure!(!validate_rmatrix(&x).is_clean(), "{name}: R mutation {i}({row},{col}) went unnoticed");
                }
            }
        }
    }
    Ok(format!("{checks} checks clean, {muts} mutations all detected"))
}

fn c2_double() -> Outcome {
    let mut out = Vec::new();
    for (name, h) in [("group_algebra2", group_algebra(2)), ("constant", constant_kz3_z2())] {
        let d = double(&h).map_err(|e| e.to_string())?;
        let dims: Vec<usize> = d.group.elements().map(|a| d.dim(a)).collect();
        let n = clean(&validate_tcoalg(&d), name)? + clean(&validate_rmatrix(&d), name)?;
        let props = check_drinfeld_props(&d);
        let n = n + clean(&props, name)?;
        for k in 1..=8 {
            ensure!(props.checks().iter().any(|c| c.starts_with(&format!("ovid-{k}"))), "{name}: ovid-{k} not run");
        }
        out.push(format!("D̄({name}) dims {dims:?}: {n} checks"));
    }
    ensure!(double(&group_algebra(2)).unwrap().dim(0) == 4, "double of k[Z/2] has wrong dimension");
    ensure!(double(&constant_kz3_z2()).unwrap().dim(1) == 18, "double of the constant fixture has wrong dimension");
    Ok(out.join("; "))
}

fn c3_mirror_involution() -> Outcome {
    let mut all: Vec<(String, TCoalg)> =
        demos::DEMO_NAMES.iter().map(|n| (n.to_string(), demos::demo(n).unwrap())).collect();
    all.push(("double_constant".into(), double(&constant_kz3_z2()).unwrap()));
    for (name, h) in &all {
        let m = mirror(h).map_err(|e| e.to_string())?;
        ensure!(m.rmatrix.is_some() == h.rmatrix.is_some(), "{name}: R family lost");
        let mm = mirror(&m).map_err(|e| e.to_string())?;
        ensure!(tcoalg_equal(&mm, h), "{name}: mirror of mirror differs");
    }
    Ok(format!("{} fixtures", all.len()))
}

fn c4_mirror_braiding() -> Outcome {
    let mut total = 0;
    for (name, h) in quasi_fixtures() {
        let hb = mirror(&h).map_err(|e| e.to_string())?;
        let mods = module_sample(&h);
        let mut pairs = 0;
        for u in &mods {
            for v in &mods {
                if u.dim * v.dim > 18 * 18 || (u.dim * v.dim > 64 && !std::ptr::eq(u, v)) {
                    continue;
                }
                let lhs = braiding_map(&hb, &mirror_module(&h, u), &mirror_module(&h, v));
                let rhs = braiding_map(&h, v, u).inverse().map_err(|e| e.to_string())?;
                ensure!(lhs == rhs, "{name}: law fails for dims {} {}", u.dim, v.dim);
                pairs += 1;
            }
        }
        ensure!(pairs >= 6, "{name}: only {pairs} pairs");
        total += pairs;
    }
    Ok(format!("{total} pairs over 6 fixtures"))
}

fn theta_v(rt: &TCoalg) -> Report {
    let v: Vec<Vector> = rt.group.elements().map(|a| extension_generator(rt, a)).collect();
    validate_ribbon(&rt.clone().with_twist(v))
}

fn c5_ribbon_extension() -> Outcome {
    let rt = ribbon_extension(&double(&group_algebra(2)).unwrap()).map_err(|e| e.to_string())?;
    ensure!(rt.dim(0) == 8, "RT component has dim {}", rt.dim(0));
    let n = clean(&validate_tcoalg(&rt), "RT")? + clean(&validate_rmatrix(&rt), "RT")?;
    let n = n + clean(&validate_ribbon(&rt), "RT with θ = v⁻¹")?;
    // Where v_α² ≠ 1 the wrong choice is caught by condition 3 alone.
    let mut others = Vec::new();
    for (name, h) in [("k[Z/3]", group_algebra(3)), ("sweedler", sweedler())] {
        let other = ribbon_extension(&double(&h).unwrap()).unwrap();
        clean(&validate_ribbon(&other), name)?;
        let rep = theta_v(&other);
        ensure!(failing(&rep) == "ribbon-3", "RT(D̄({name})) with θ = v fails {}", failing(&rep));
        others.push(format!("RT(D̄({name})) θ = v fails ribbon-3"));
    }
    let rep = theta_v(&rt);
    if !rep.failed("ribbon-3") {
        let u = drinfeld_elements(&rt);
        let degenerate = rt.group.elements().all(|a| extension_generator(&rt, a) == *rt.theta(a));
        let w_trivial = rt.group.elements().all(|a| ribbon_square(&rt, &u, a) == *rt.unit(a));
        return Err(format!(
            "{n} checks clean with θ = v⁻¹, but θ = v passes condition 3 on RT(D̄(k[Z/2])): \
             v_α = v_α⁻¹ here ({degenerate}), as v_α² = u_α s(u_α) = 1 ({w_trivial}); {}",
            others.join("; ")
        ));
    }
    Ok(format!("{n} checks clean; θ = v fails {}; {}", failing(&rep), others.join("; ")))
}

fn c6_lemma_identities() -> Outcome {
    let mut fx = quasi_fixtures();
    fx.push(("rt_double_kz2", demos::demo("rt_double_kz2").unwrap()));
    fx.push(("group_algebra3", group_algebra(3)));
    let mut n = 0;
    for (name, h) in &fx {
        n += clean(&check_lemma_identities(h).map_err(|e| e.to_string())?, name)?;
        let hb = mirror(h).map_err(|e| e.to_string())?;
        n += clean(&check_lemma_identities(&hb).map_err(|e| e.to_string())?, name)?;
    }
    Ok(format!("{n} identities over {} fixtures and their mirrors", fx.len()))
}

fn c7_center() -> Outcome {
    let mut fixtures = 0;
    let mut samples = 0;
    for (name, h) in [("group_algebra2", group_algebra(2)), ("sweedler", sweedler()), ("constant", constant_kz3_z2())] {
        let d = double(&h).unwrap();
        let mut dmods = vec![trivial_module(&d)];
        for a in d.group.elements() {
            dmods.push(regular_module(&d, a));
        }
        if d.dim(0) <= 8 {
            dmods.extend(small_characters(&d, 0).into_iter().take(4));
        }
        let mut xs = vec![trivial_module(&h)];
        for a in h.group.elements() {
            xs.push(regular_module(&h, a));
        }
        xs.extend(regular_submodules(&h, 0).into_iter().filter(|m| m.dim == 2).take(2));
        samples += xs.len();
        for m in &dmods {
            let v = ddouble_to_yd(&h, m);
            clean(&validate_yd(&h, &v), name)?;
            let hb = halfbraiding_from_yd(&h, &v);
            ensure!(yd_from_halfbraiding(&h, &hb) == v, "{name}: F1∘F̂1 ≠ Id (dim {})", m.dim);
            // An independently built half-braiding, sent to YD and back.
            let sigma = halfbraiding_from_ddouble(&h, m);
            let back = halfbraiding_from_yd(&h, &yd_from_halfbraiding(&h, &sigma));
            for x in &xs {
                ensure!(back.eval(x) == sigma.eval(x), "{name}: F̂1∘F1 ≠ Id on X of dim {}", x.dim);
                ensure!(halfbraiding_eval(&h, &v, x) == hb.eval(x), "{name}: eval mismatch");
            }
            clean(&check_halfbraiding(&h, &hb, &xs), name)?;
            fixtures += 1;
        }
    }
    ensure!(fixtures >= 5, "only {fixtures} YD fixtures");
    Ok(format!("{fixtures} YD fixtures, {samples} sampled X"))
}

fn c8_yd_double() -> Outcome {
    let mut objs = 0;
    let mut pairs = 0;
    for (name, h) in [("group_algebra2", group_algebra(2)), ("sweedler", sweedler()), ("constant", constant_kz3_z2())] {
        let d = double(&h).unwrap();
        let mut dmods = vec![trivial_module(&d)];
        for a in d.group.elements() {
            dmods.push(regular_module(&d, a));
        }
        if d.dim(0) <= 8 {
            dmods.extend(small_characters(&d, 0).into_iter().take(4));
        }
        if d.dim(0) <= 16 {
            dmods.extend(regular_submodules(&d, 0).into_iter().filter(|m| m.dim < 8).take(3));
        }
        let yds: Vec<YDModule> = dmods.iter().map(|m| ddouble_to_yd(&h, m)).collect();
        for (m, v) in dmods.iter().zip(&yds) {
            ensure!(yd_to_ddouble(&h, v) == *m, "{name}: D̄-module round trip differs");
            ensure!(ddouble_to_yd(&h, &yd_to_ddouble(&h, v)) == *v, "{name}: YD round trip differs");
            clean(&yd_compatibility(&h, v).map_err(|e| e.to_string())?, name)?;
            objs += 1;
        }
        let mut local = 0;
        for (i, (m1, v1)) in dmods.iter().zip(&yds).enumerate() {
            for (j, (m2, v2)) in dmods.iter().zip(&yds).enumerate() {
                if m1.dim * m2.dim > 64 && (i != j || m1.dim > 18) {
                    continue;
                }
                ensure!(braiding_map(&d, m1, m2) == yd_braiding(&h, v1, v2), "{name}: braidings disagree");
                local += 1;
            }
        }
        ensure!(local >= 6, "{name}: only {local} pairs");
        pairs += local;
    }
    Ok(format!("{objs} objects round-trip, braidings agree on {pairs} pairs"))
}

fn c9_braiding_twist() -> Outcome {
    let rt = demos::demo("rt_double_kz2").unwrap();
    let sample = rt_sample(&rt);
    let b = check_braiding_axioms(&rt, &sample[..5]);
    let nb = clean(&b, "braiding")?;
    for c in ["braiding-a", "braiding-b", "braiding-c", "braiding-d"] {
        ensure!(b.passed(c), "{c} not exercised");
    }
    let t = check_twist_axioms(&rt, &sample);
    let nt = clean(&t, "twist")?;
    for c in ["twist-natural", "twist-main", "twist-ultra", "tortility"] {
        ensure!(t.passed(c), "{c} not exercised");
    }
    let mut triples = 0;
    for (i, j, k) in [(0, 1, 2), (2, 3, 4), (1, 2, 1), (3, 3, 5), (4, 2, 0)] {
        ensure!(yang_baxter(&rt, &sample[i], &sample[j], &sample[k]), "Yang-Baxter fails on ({i},{j},{k})");
        triples += 1;
    }
    Ok(format!("{nb} braiding + {nt} twist checks over {} objects, {triples} YB triples", sample.len()))
}

fn c10_omega() -> Outcome {
    let d = double(&group_algebra(2)).unwrap();
    let mut mods = vec![trivial_module(&d), regular_module(&d, 0)];
    mods.extend(small_characters(&d, 0));
    mods.extend(regular_submodules(&d, 0));
    let ch = small_characters(&d, 0);
    for a in &ch {
        for b in &ch {
            mods.push(tensor_modules(&d, a, b));
        }
    }
    let u = drinfeld_elements(&d);
    for m in &mods {
        let w = m.act(&ribbon_square(&d, &u, m.grade));
        ensure!(omega(&d, m, OmegaVariant::InverseBraiding).unwrap() == w, "ω ≠ u s(u) on a dim {} module", m.dim);
    }
    // Discriminate the two readings of c̃ over a wider fixture set.
    let mut combined: Vec<(TCoalg, HModule)> = mods.iter().map(|m| (d.clone(), m.clone())).collect();
    for h in [double(&sweedler()).unwrap(), double(&constant_kz3_z2()).unwrap()] {
        for a in h.group.elements() {
            combined.push((h.clone(), regular_module(&h, a)));
        }
    }
    let passes = |v: OmegaVariant| {
        combined.iter().all(|(h, m)| {
            let u = drinfeld_elements(h);
            omega(h, m, v).unwrap() == m.act(&ribbon_square(h, &u, m.grade))
        })
    };
    let (inv, plain) = (passes(OmegaVariant::InverseBraiding), passes(OmegaVariant::PlainBraiding));
    ensure!(inv != plain, "both or neither reading passes (c⁻¹ {inv}, c {plain})");
    ensure!(inv, "only the plain reading passes");
    Ok(format!("{} D̄(k[Z/2]) modules; exactly one reading passes: c̃ = c⁻¹", mods.len()))
}

fn c11_rib_rt() -> Outcome {
    let d = double(&group_algebra(2)).unwrap();
    let rt = ribbon_extension(&d).unwrap();
    let ns = rt_sample(&rt);
    let mut ribs = Vec::new();
    for n in &ns {
        let o = rib_from_rt_module(&rt, n).map_err(|e| e.to_string())?;
        clean(&validate_rib(&d, &o), "rib")?;
        ensure!(rt_module_from_rib(&o).map_err(|e| e.to_string())? == *n, "RT round trip differs (dim {})", n.dim);
        let again = rib_from_rt_module(&rt, &rt_module_from_rib(&o).unwrap()).unwrap();
        ensure!(again == o, "Rib round trip differs (dim {})", n.dim);
        ribs.push(o);
    }
    let mut pairs = 0;
    for (i, n1) in ns.iter().enumerate() {
        for (j, n2) in ns.iter().enumerate() {
            if n1.dim * n2.dim > 8 {
                continue;
            }
            let t = rib_tensor(&d, &ribs[i], &ribs[j]);
            let nn = tensor_modules(&rt, n1, n2);
            ensure!(t.t == twist_map(&rt, &nn), "rib_tensor twist differs from θ on ({i},{j})");
            ensure!(t.t == tensor_twist_formula(&rt, n1, n2), "elementwise expansion differs on ({i},{j})");
            pairs += 1;
        }
    }
    ensure!(pairs >= 4, "only {pairs} pairs");
    Ok(format!("{} round trips, {pairs} tensor pairs", ns.len()))
}

fn c12_good_duals() -> Outcome {
    let rt = demos::demo("rt_double_kz2").unwrap();
    let sample = rt_sample(&rt);
    let good = |m: &HModule| -> std::result::Result<bool, String> {
        let p = good_dual_predicates(&rt, m).map_err(|e| e.to_string())?;
        Ok(p.reflexive && p.good && p.tortile)
    };
    for m in &sample {
        ensure!(good(m)?, "dim {} object is not good", m.dim);
        ensure!(good(&dual_module(&rt, m))?, "dual of a dim {} object is not good", m.dim);
    }
    let mut pairs = 0;
    for a in &sample {
        for b in &sample {
            if a.dim * b.dim > 8 {
                continue;
            }
            ensure!(good(&tensor_modules(&rt, a, b))?, "tensor of dims {} {} is not good", a.dim, b.dim);
            pairs += 1;
        }
    }
    Ok(format!("{} objects and duals, {pairs} tensor products", sample.len()))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, name: "axiom soundness", limit: secs(10), run: c1_axiom_soundness },
        Criterion { id: 2, name: "double correctness", limit: secs(60), run: c2_double },
        Criterion { id: 3, name: "mirror involution", limit: secs(5), run: c3_mirror_involution },
        Criterion { id: 4, name: "mirror braiding law", limit: secs(60), run: c4_mirror_braiding },
        Criterion { id: 5, name: "ribbon extension", limit: secs(60), run: c5_ribbon_extension },
        Criterion { id: 6, name: "lemma identities", limit: secs(10), run: c6_lemma_identities },
        Criterion { id: 7, name: "center vs YD", limit: secs(60), run: c7_center },
        Criterion { id: 8, name: "YD vs Rep(D̄)", limit: secs(60), run: c8_yd_double },
        Criterion { id: 9, name: "braiding/twist suites", limit: secs(90), run: c9_braiding_twist },
        Criterion { id: 10, name: "ω vs Drinfeld", limit: secs(60), run: c10_omega },
        Criterion { id: 11, name: "Rib vs RT-modules", limit: secs(60), run: c11_rib_rt },
        Criterion { id: 12, name: "good-dual closure", limit: secs(90), run: c12_good_duals },
    ];
    let start = Instant::now();
    let mut failed = 0;
    for c in &criteria {
        let t = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let el = t.elapsed();
        let res = match res {
            Ok(d) if el > c.limit => Err(format!("took {el:.1?}, limit {:?} ({d})", c.limit)),
            r => r,
        };
        match res {
            Ok(d) => println!("criterion {:>2} PASS {:<22} {:>8.2?} (limit {:?}) {d}", c.id, c.name, el, c.limit),
            Err(d) => {
                failed += 1;
                println!("criterion {:>2} FAIL {:<22} {:>8.2?} (limit {:?}) {d}", c.id, c.name, el, c.limit);
            }
        }
    }
    let total = start.elapsed();
    let limit = Duration::from_secs(300);
    if total > limit {
        failed += 1;
        println!("total runtime {total:.1?} exceeds {limit:?}");
    }
    println!("acceptance: {} of {} criteria passed in {total:.1?}", criteria.len() - failed.min(criteria.len()), criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
