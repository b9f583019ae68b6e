//! One function per subcommand. Each returns the human tables, the
//! machine-readable result and whether every check passed.

use anyhow::{anyhow, Context, Result};
use serde_json::{json, Value};
use tensalg::adjunctions::{classify, run_suite, unit_mu, Category, Suite, SuiteConfig};
use tensalg::fsemilattice::construct_fj;
use tensalg::functors::{hom_frame, tensor};
use tensalg::vmodule::enumerate_module_homs;
use tensalg::{example, Exec, FModule, FramePower, Indexed, Limits, Module, Quantale};

use crate::table::Table;
use crate::workspace::{ModuleDoc, Workspace};

/// What a command produced.
pub struct Output {
    pub tables: Vec<Table>,
    pub result: Value,
    pub ok: bool,
}

impl Output {
    fn ok(tables: Vec<Table>, result: Value) -> Self {
        Self { tables, result, ok: true }
    }
}

/// The example workspace shipped with the binary.
pub const PAPER_EXAMPLE: &str = include_str!("../data/paper_example.json");

fn labels_of(q: &Quantale, vs: impl IntoIterator<Item = usize>) -> Vec<String> {
    vs.into_iter().map(|v| q.label(v).to_string()).collect()
}

fn r_table(title: &str, names: &[String], q: &Quantale, r: &[Vec<usize>]) -> Table {
    let mut t = Table::new(title, std::iter::once(String::new()).chain(names.iter().cloned()));
    for (name, row) in names.iter().zip(r) {
        t.row(std::iter::once(name.clone()).chain(labels_of(q, row.iter().copied())));
    }
    t
}

pub fn validate(ws: &Workspace) -> Output {
    let mut t = Table::new("objects", ["kind", "name", "size", "notes"]);
    for (name, q) in &ws.quantales {
        let note = if q.is_commutative() { "commutative" } else { "not commutative" };
        t.row(["quantale".to_string(), name.clone(), q.len().to_string(), note.to_string()]);
    }
    for (name, qn, m) in &ws.modules {
        t.row(["module".to_string(), name.clone(), m.len().to_string(), format!("over {qn}")]);
    }
    for (name, qn, f) in &ws.frames {
        t.row(["frame".to_string(), name.clone(), f.len().to_string(), format!("over {qn}")]);
    }
    for (name, mn, s) in &ws.fsemilattices {
        t.row(["F-semilattice".to_string(), name.clone(), s.len().to_string(), format!("on {mn}")]);
    }
    let result = json!({
        "command": "validate",
        "ok": true,
        "objects": ws.summary(),
        "document": ws.to_document(),
    });
    Output::ok(vec![t], result)
}

pub fn homs(ws: &Workspace, from: &str, to: &str) -> Result<Output> {
    let a = ws.module_or_carrier(from).ok_or_else(|| anyhow!("no module or F-semilattice named {from:?}"))?;
    let l = ws.module_or_carrier(to).ok_or_else(|| anyhow!("no module or F-semilattice named {to:?}"))?;
    let homs = enumerate_module_homs(a, l)?;
    let mut t = Table::new(
        format!("module homomorphisms {from} -> {to} ({})", homs.len()),
        std::iter::once(String::new()).chain(a.carrier().labels().iter().cloned()),
    );
    let mut values = Vec::new();
    for (k, h) in homs.iter().enumerate() {
        let labels: Vec<String> = h.values.iter().map(|&x| l.label(x).to_string()).collect();
        t.row(std::iter::once(format!("h{k}")).chain(labels.iter().cloned()));
        values.push(labels);
    }
    let result = json!({
        "command": "homs",
        "ok": true,
        "from": from,
        "to": to,
        "domain": a.carrier().labels(),
        "count": homs.len(),
        "homs": values,
    });
    Ok(Output::ok(vec![t], result))
}

pub fn hom_frame_cmd(ws: &Workspace, fsl: &str, module: &str, limits: &Limits) -> Result<Output> {
    let h = ws.fsemilattice(fsl).ok_or_else(|| anyhow!("no F-semilattice named {fsl:?}"))?;
    let l = ws.module(module).ok_or_else(|| anyhow!("no module named {module:?}"))?;
    let hf = hom_frame(h.clone(), l.clone(), limits, Exec::default())?;
    let q = h.module().quantale().clone();
    let names: Vec<String> = (0..hf.len()).map(|k| format!("p{k}")).collect();
    let mut pts = Table::new(
        format!("points of J[{fsl},{module}] ({})", hf.len()),
        std::iter::once(String::new()).chain(h.module().carrier().labels().iter().cloned()),
    );
    let mut points = Vec::new();
    for (name, p) in names.iter().zip(&hf.points) {
        let labels: Vec<String> = p.iter().map(|&x| l.label(x).to_string()).collect();
        pts.row(std::iter::once(name.clone()).chain(labels.iter().cloned()));
        points.push(labels);
    }
    let r = hf.frame.r_table();
    let rt = r_table("r (row α, column β)", &names, &q, r);
    let result = json!({
        "command": "hom-frame",
        "ok": true,
        "points": points,
        "r": r.iter().map(|row| labels_of(&q, row.iter().copied())).collect::<Vec<_>>(),
    });
    Ok(Output::ok(vec![pts, rt], result))
}

pub fn tensor_cmd(ws: &Workspace, frame: &str, fsl: &str, limits: &Limits) -> Result<Output> {
    let j = ws.frame(frame).ok_or_else(|| anyhow!("no frame named {frame:?}"))?;
    let h = ws.fsemilattice(fsl).ok_or_else(|| anyhow!("no F-semilattice named {fsl:?}"))?;
    let tm = tensor(j.clone(), h.clone(), limits)?;
    let mut t = Table::new(
        format!("elements of {frame}⊗{fsl} ({} of {} in A^T)", tm.len(), tm.ambient.len()),
        std::iter::once("#".to_string()).chain(j.points().iter().cloned()),
    );
    let lab = |x: usize| h.module().label(x).to_string();
    let mut elems = Vec::new();
    for (k, e) in tm.elements().iter().enumerate() {
        let cells: Vec<String> = e.iter().map(|&x| lab(x)).collect();
        t.row(std::iter::once(k.to_string()).chain(cells.iter().cloned()));
        elems.push(cells);
    }
    let q = tm.quotient()?;
    let m = q.fsl.module();
    let doc = ModuleDoc {
        name: format!("{frame}⊗{fsl}"),
        quantale: ws.frames.iter().find(|(n, _, _)| n == frame).map(|(_, qn, _)| qn.clone()).unwrap_or_default(),
        elements: m.carrier().labels().to_vec(),
        leq: (0..m.len()).map(|a| (0..m.len()).map(|b| m.carrier().leq(a, b) as u8).collect()).collect(),
        action: m.action_table().iter().map(|r| r.iter().map(|&x| m.label(x).to_string()).collect()).collect(),
    };
    let result = json!({
        "command": "tensor",
        "ok": true,
        "size": tm.len(),
        "ambient_size": tm.ambient.len(),
        "generating_pairs": tm.pairs.len(),
        "elements": elems,
        "module": doc,
    });
    Ok(Output::ok(vec![t], result))
}

pub fn fj(ws: &Workspace, module: &str, frame: &str, limits: &Limits) -> Result<Output> {
    let a = ws.module_or_carrier(module).ok_or_else(|| anyhow!("no module named {module:?}"))?;
    let j = ws.frame(frame).ok_or_else(|| anyhow!("no frame named {frame:?}"))?;
    let fp: FramePower<_> = construct_fj(a.clone(), j.clone(), limits.max_power)?;
    let elems = fp.elements(limits.max_power)?;
    let mut t = Table::new(
        format!("F^J on {module}^{frame} ({} elements)", elems.len()),
        ["x", "F^J(x)"],
    );
    let mut rows = Vec::new();
    for x in &elems {
        let (sx, sf) = (fp.show(x), fp.show(&fp.f(x)));
        t.row([sx.clone(), sf.clone()]);
        rows.push(json!({ "x": sx, "F": sf }));
    }
    let result = json!({ "command": "fj", "ok": true, "size": elems.len(), "table": rows });
    Ok(Output::ok(vec![t], result))
}

pub fn check(suite: Suite, seed: u64, count: usize, limits: Limits) -> Output {
    let cfg = SuiteConfig { seed, count, limits, ..SuiteConfig::default() };
    let report = run_suite(suite, &cfg);
    let mut t = Table::new(format!("suite {} (seed {seed}, {count} instances)", report.suite), [
        "category", "checks", "passed", "failed",
    ]);
    for cat in [Category::Triangle, Category::Naturality, Category::Validator, Category::HomOracle, Category::Nucleus] {
        let (n, p) = report.of(cat).fold((0, 0), |(n, p), c| (n + 1, p + c.passed as usize));
        if n > 0 {
            t.row([format!("{cat:?}").to_lowercase(), n.to_string(), p.to_string(), (n - p).to_string()]);
        }
    }
    let c = &report.counts;
    t.row(["total".to_string(), c.checks.to_string(), c.passed.to_string(), c.failed.to_string()]);
    let mut tables = vec![t];
    if c.failed > 0 {
        let mut f = Table::new("failures", ["check", "instance", "witness"]);
        for x in report.failures().take(50) {
            f.row([x.name.clone(), x.instance.clone(), x.witness.clone().unwrap_or_default()]);
        }
        tables.push(f);
    }
    let failures: Vec<_> = report.failures().cloned().collect();
    let result = json!({
        "command": "check",
        "ok": report.all_passed(),
        "suite": report.suite,
        "seed": seed,
        "counts": report.counts,
        "failures": failures,
    });
    Output { tables, result, ok: report.all_passed() }
}

/// The three homomorphisms of the worked example, over (0, a, b, c, 1).
const EXPECTED_HOMS: [(&str, [&str; 5]); 3] = [
    ("f1", ["0", "0", "0", "0", "0"]),
    ("f7", ["0", "0", "1", "1", "1"]),
    ("f8", ["0", "1", "1", "1", "1"]),
];

/// `r(α,β)` with rows and columns in the order f1, f7, f8.
const EXPECTED_R: [[&str; 3]; 3] = [["1", "0", "0"], ["1", "0", "0"], ["1", "1", "0"]];

/// `μ_H(x)` for x = 0, a, b, c, 1, over the points f1, f7, f8.
const EXPECTED_MU: [[&str; 3]; 5] =
    [["0", "0", "0"], ["0", "0", "1"], ["0", "1", "1"], ["0", "1", "1"], ["0", "1", "1"]];

pub fn paper_example(limits: &Limits) -> Result<Output> {
    let ws = Workspace::parse(PAPER_EXAMPLE, limits).context("embedded example")?;
    let h = ws.fsemilattice("H").context("H")?;
    let a = h.module();
    let l = ws.module("L").context("L")?;
    let q = a.quantale().clone();
    let mut checks: Vec<(String, bool)> = Vec::new();

    let homs = enumerate_module_homs(a, l)?;
    let hom_labels: Vec<Vec<String>> =
        homs.iter().map(|h| h.values.iter().map(|&x| l.label(x).to_string()).collect()).collect();
    let expected: Vec<Vec<String>> =
        EXPECTED_HOMS.iter().map(|(_, v)| v.iter().map(|s| s.to_string()).collect()).collect();
    checks.push(("exactly the homomorphisms f1, f7, f8".into(), hom_labels == expected));
    let name_of = |vals: &[String]| {
        EXPECTED_HOMS
            .iter()
            .find(|(_, e)| e.iter().zip(vals).all(|(x, y)| x == y))
            .map(|(n, _)| n.to_string())
    };
    let names: Vec<String> =
        hom_labels.iter().enumerate().map(|(k, v)| name_of(v).unwrap_or_else(|| format!("h{k}"))).collect();
    let mut ht = Table::new(
        format!("module homomorphisms A -> L ({})", homs.len()),
        std::iter::once(String::new()).chain(a.carrier().labels().iter().cloned()),
    );
    for (n, v) in names.iter().zip(&hom_labels) {
        ht.row(std::iter::once(n.clone()).chain(v.iter().cloned()));
    }

    let hf = hom_frame(h.clone(), l.clone(), limits, Exec::Sequential)?;
    let r = hf.frame.r_table();
    let r_labels: Vec<Vec<String>> = r.iter().map(|row| labels_of(&q, row.iter().copied())).collect();
    let expected_r: Vec<Vec<String>> = EXPECTED_R.iter().map(|row| row.iter().map(|s| s.to_string()).collect()).collect();
    checks.push(("r table of J[H,L]".into(), r_labels == expected_r));
    let rt = r_table("r (row α, column β)", &names, &q, r);

    let mu: Vec<Vec<usize>> = (0..a.len()).map(|x| unit_mu(&hf, &x)).collect();
    let mu_labels: Vec<Vec<String>> = mu.iter().map(|row| row.iter().map(|&y| l.label(y).to_string()).collect()).collect();
    let expected_mu: Vec<Vec<String>> =
        EXPECTED_MU.iter().map(|row| row.iter().map(|s| s.to_string()).collect()).collect();
    checks.push(("μ_H table".into(), mu_labels == expected_mu));
    let mut mt = Table::new("μ_H (row x, column α)", std::iter::once(String::new()).chain(names.iter().cloned()));
    for (x, row) in mu_labels.iter().enumerate() {
        mt.row(std::iter::once(a.label(x).to_string()).chain(row.iter().cloned()));
    }

    let hix = Indexed::new(h.clone(), limits.max_power)?;
    let target = FramePower::new(l.clone(), hf.frame.clone())?;
    let (lax, strict, injective) = classify(&hix, &target, &mu)?;
    checks.push(("μ_H is lax".into(), lax));
    checks.push(("μ_H is not injective".into(), !injective));
    let yn = |b: bool| if b { "yes" } else { "no" };
    let mut ct = Table::new("classification of μ_H", ["property", "value"]);
    ct.row(["lax", yn(lax)]);
    ct.row(["injective", yn(injective)]);
    ct.row(["strict (information)", yn(strict)]);

    let m3 = match example::m3() {
        Ok(m) => format!("accepted, commutative: {}", yn(m.is_commutative())),
        Err(e) => format!("rejected: {e}"),
    };
    let mut info = Table::new("diamond quantale table (information)", ["result"]);
    info.row([m3.clone()]);
    let chain = example::v3();
    info.row([format!("three-chain V accepted, commutative: {}", yn(chain.is_commutative()))]);

    let mut st = Table::new(
        format!("golden comparison (lax: {}, injective: {})", yn(lax), yn(injective)),
        ["check", "result"],
    );
    for (name, ok) in &checks {
        st.row([name.clone(), if *ok { "pass" } else { "FAIL" }.to_string()]);
    }
    let ok = checks.iter().all(|(_, b)| *b);
    let result = json!({
        "command": "paper-example",
        "ok": ok,
        "homs": names.iter().zip(&hom_labels).map(|(n, v)| json!({ "name": n, "values": v })).collect::<Vec<_>>(),
        "r": r_labels,
        "mu": mu_labels,
        "lax": lax,
        "injective": injective,
        "strict": strict,
        "m3": m3,
        "checks": checks.iter().map(|(n, b)| json!({ "name": n, "passed": b })).collect::<Vec<_>>(),
    });
    Ok(Output { tables: vec![ht, rt, mt, ct, info, st], result, ok })
}
