use num::complex::Complex64;
use serde_json::{json, Value};

use crate::approx::{
    convergence_hull, error_curve, escape_witness, geometric_tail_bound, truncate,
};
use crate::error::Error;
use crate::extremal::{
    eval_vsk, hull_membership, hull_sampler, vsk_on_axes, HullCertificate, MonomialSiciak,
    ReinhardtBody, DEFAULT_DEPTH,
};
use crate::lattice::{
    fiber_structure, independent_exponents, monomial, proper_box_pullback, separate_points,
};
use crate::polytope::{
    distance_growth, dual_cone, enumerate_exponents, lattice_distance_with, refine,
    DistanceNorm, EnumerationBudget, Membership, RationalPolytope,
};
use crate::rational::{self, Rat};

use super::input::{self, complex_vec, rats, NormDoc, PolytopeDoc, Problem};
use super::output::{float, floats, indexed, packed, Artifact, Table};
use super::{ApproxCmd, Command, CliError, ExperimentConfig, LatticeCmd, PolytopeCmd, VskCmd};

const DEFAULT_COUNT: usize = 200;
const DEFAULT_N: u64 = 10;

type Out = Result<Artifact, CliError>;

fn need<'a, T>(field: &'a Option<T>, name: &str, cmd: &str) -> Result<&'a T, CliError> {
    field
        .as_ref()
        .ok_or_else(|| CliError::schema(name, &format!("missing field, required by `{cmd}`")))
}

fn rat_str(r: &Rat) -> String {
    rational::format_rational(r)
}

fn rat_strs(v: &[Rat]) -> Vec<String> {
    v.iter().map(rat_str).collect()
}

fn int_strs(v: &[i64]) -> Vec<String> {
    v.iter().map(i64::to_string).collect()
}

fn complex_json(v: &[Complex64]) -> Value {
    v.iter().map(|c| json!({"re": c.re, "im": c.im})).collect()
}

struct Ctx<'a> {
    config: &'a ExperimentConfig,
    problem: &'a Problem,
    name: &'static str,
}

impl Ctx<'_> {
    fn polytope(&self) -> Result<RationalPolytope, CliError> {
        Ok(need(&self.problem.polytope, "polytope", self.name)?.build()?)
    }

    /// `K` from the document, the torus `T^n` when absent.
    fn body(&self, n: usize) -> Result<ReinhardtBody, CliError> {
        match &self.problem.body {
            Some(b) => b.build(),
            None => Ok(ReinhardtBody::torus(n)),
        }
    }

    fn m(&self) -> Result<u64, CliError> {
        match self.config.m.or(self.problem.m) {
            Some(m) => Ok(m),
            None => Err(CliError::schema("m", &format!("missing, required by `{}` (or pass --m)", self.name))),
        }
    }

    /// `x` or `points`, exactly.
    fn exact_points(&self) -> Result<Vec<Vec<Rat>>, CliError> {
        let p = self.problem;
        let raw: Vec<&Vec<input::RatLit>> = match (&p.x, &p.points) {
            (Some(x), None) => vec![x],
            (None, Some(pts)) => pts.iter().collect(),
            (Some(_), Some(_)) => {
                return Err(CliError::schema("points", "give either `x` or `points`, not both"))
            }
            (None, None) => {
                return Err(CliError::schema(
                    "x",
                    &format!("missing, `{}` needs `x` or `points`", self.name),
                ))
            }
        };
        Ok(raw.into_iter().map(|v| rats(v)).collect::<crate::Result<_>>()?)
    }

    fn float_points(&self) -> Result<Vec<Vec<f64>>, CliError> {
        Ok(self
            .exact_points()?
            .iter()
            .map(|v| rational::vec_to_f64(v))
            .collect())
    }

    fn budget(&self) -> EnumerationBudget {
        EnumerationBudget::from_env()
    }
}

pub(super) fn dispatch(config: &ExperimentConfig, problem: &Problem) -> Out {
    let ctx = |name| Ctx {
        config,
        problem,
        name,
    };
    match config.command {
        Command::Polytope(c) => match c {
            PolytopeCmd::Support => polytope_support(&ctx("polytope support")),
            PolytopeCmd::Contains => polytope_contains(&ctx("polytope contains")),
            PolytopeCmd::Refine => polytope_refine(&ctx("polytope refine")),
            PolytopeCmd::Exponents => polytope_exponents(&ctx("polytope exponents")),
            PolytopeCmd::Distance => polytope_distance(&ctx("polytope distance")),
            PolytopeCmd::Dual => polytope_dual(&ctx("polytope dual")),
            PolytopeCmd::Section => polytope_section(&ctx("polytope section")),
        },
        Command::Lattice(c) => match c {
            LatticeCmd::Independent => lattice_independent(&ctx("lattice independent")),
            LatticeCmd::Separate => lattice_separate(&ctx("lattice separate")),
            LatticeCmd::Fibers => lattice_fibers(&ctx("lattice fibers")),
            LatticeCmd::Pullback => lattice_pullback(&ctx("lattice pullback")),
        },
        Command::Vsk(c) => match c {
            VskCmd::Eval => {
                let c = ctx("vsk eval");
                let pts = c.float_points()?;
                vsk_rows(&c, pts)
            }
            VskCmd::Grid => vsk_grid(&ctx("vsk grid")),
            VskCmd::Hull => vsk_hull(&ctx("vsk hull")),
            VskCmd::Siciak => vsk_siciak(&ctx("vsk siciak")),
            VskCmd::Axes => vsk_axes(&ctx("vsk axes")),
            VskCmd::Sample => vsk_sample(&ctx("vsk sample")),
        },
        Command::Approx(c) => match c {
            ApproxCmd::Run => approx_run(&ctx("approx run")),
            ApproxCmd::Escape => approx_escape(&ctx("approx escape")),
            ApproxCmd::Domain => approx_domain(&ctx("approx domain")),
        },
    }
}

fn polytope_support(c: &Ctx) -> Out {
    let s = c.polytope()?;
    let mut table = Table::new(indexed("x", s.dim()).into_iter().chain(["value".into()]));
    let mut rows = Vec::new();
    for x in c.exact_points()? {
        let v = s.support(&x)?;
        let mut row = rat_strs(&x);
        row.push(rat_str(&v));
        table.push(row);
        rows.push(json!({"x": rat_strs(&x), "value": rat_str(&v), "value_f64": rational::to_f64(&v)}));
    }
    Ok(Artifact {
        json: json!({ "rows": rows }),
        table: Some(table),
    })
}

fn polytope_contains(c: &Ctx) -> Out {
    let s = c.polytope()?;
    let mut table = Table::new(indexed("x", s.dim()).into_iter().chain(["member".into()]));
    let mut rows = Vec::new();
    for x in c.exact_points()? {
        let m = s.contains(&x)?;
        let mut row = rat_strs(&x);
        row.push(m.is_inside().to_string());
        table.push(row);
        rows.push(match m {
            Membership::Inside { weights } => {
                json!({"x": rat_strs(&x), "member": true, "weights": rat_strs(&weights)})
            }
            Membership::Outside { separator } => {
                json!({"x": rat_strs(&x), "member": false, "separator": rat_strs(&separator)})
            }
        });
    }
    Ok(Artifact {
        json: json!({ "rows": rows }),
        table: Some(table),
    })
}

fn vertex_table(p: &RationalPolytope) -> Table {
    let mut t = Table::new(indexed("v", p.dim()));
    for v in p.vertices() {
        t.push(rat_strs(v));
    }
    t
}

fn polytope_refine(c: &Ctx) -> Out {
    let s = c.polytope()?;
    let m = c.m()?;
    let r = refine(&s, m, c.budget())?;
    Ok(Artifact {
        json: json!({"m": m, "polytope": PolytopeDoc::from_polytope(&r)}),
        table: Some(vertex_table(&r)),
    })
}

fn polytope_exponents(c: &Ctx) -> Out {
    let s = c.polytope()?;
    let m = c.m()?;
    let set = enumerate_exponents(&s, m, c.budget())?;
    let mut table = Table::new(indexed("alpha", s.dim()));
    for p in &set.points {
        table.push(int_strs(p));
    }
    Ok(Artifact {
        json: json!({"m": m, "count": set.len(), "points": set.points}),
        table: Some(table),
    })
}

fn polytope_distance(c: &Ctx) -> Out {
    let s = c.polytope()?;
    if let Some(m_max) = c.config.m.or(c.problem.m) {
        let rows = distance_growth(&s, m_max, c.budget())?;
        let mut table = Table::new([
            "m",
            "full_dimensional",
            "distance",
            "root",
            "bound_root",
            "bound_holds",
        ]);
        let mut out = Vec::new();
        for r in &rows {
            table.push(vec![
                r.m.to_string(),
                r.full_dimensional.to_string(),
                float(r.distance),
                float(r.root),
                float(r.bound_root),
                r.bound_holds.to_string(),
            ]);
            out.push(json!({
                "m": r.m,
                "full_dimensional": r.full_dimensional,
                "distance": r.distance,
                "root": r.root,
                "bound_root": r.bound_root,
                "bound_holds": r.bound_holds,
            }));
        }
        return Ok(Artifact {
            json: json!({ "growth": out }),
            table: Some(table),
        });
    }
    let norm = match c.problem.norm.unwrap_or_default() {
        NormDoc::Euclidean => DistanceNorm::Euclidean,
        NormDoc::L1 => DistanceNorm::L1,
    };
    let d = lattice_distance_with(&s, norm)?;
    let norm_name = match d.norm {
        DistanceNorm::Euclidean => "euclidean",
        DistanceNorm::L1 => "l1",
    };
    let mut table = Table::new(["norm", "distance", "nearest", "box_size", "bound", "bound_holds"]);
    table.push(vec![
        norm_name.into(),
        float(d.distance),
        packed(&int_strs(&d.nearest)),
        d.box_size.to_string(),
        float(d.bound),
        d.bound_holds.to_string(),
    ]);
    Ok(Artifact {
        json: json!({
            "norm": norm_name,
            "exact": rat_str(&d.exact),
            "distance": d.distance,
            "nearest": d.nearest,
            "box_size": d.box_size,
            "bound": d.bound,
            "bound_holds": d.bound_holds,
        }),
        table: Some(table),
    })
}

fn polytope_dual(c: &Ctx) -> Out {
    let s = c.polytope()?;
    let cone = dual_cone(&s);
    let n = s.dim();
    let mut table = Table::new(["kind".to_string()].into_iter().chain(indexed("c", n)));
    let strs = |vs: &[Vec<Rat>]| vs.iter().map(|v| rat_strs(v)).collect::<Vec<_>>();
    for h in &cone.halfspaces {
        table.push(["halfspace".to_string()].into_iter().chain(rat_strs(h)).collect());
    }
    let (rays, lineality) = match &cone.dual_generators {
        Some(g) => {
            for r in &g.rays {
                table.push(["ray".to_string()].into_iter().chain(rat_strs(r)).collect());
            }
            for l in &g.lineality {
                table.push(["lineality".to_string()].into_iter().chain(rat_strs(l)).collect());
            }
            (json!(strs(&g.rays)), json!(strs(&g.lineality)))
        }
        None => (Value::Null, Value::Null),
    };
    Ok(Artifact {
        json: json!({
            "halfspaces": strs(&cone.halfspaces),
            "dual_rays": rays,
            "dual_lineality": lineality,
        }),
        table: Some(table),
    })
}

fn polytope_section(c: &Ctx) -> Out {
    let s = c.polytope()?;
    let j = need(&c.problem.j, "J", c.name)?;
    let idx = input::zero_based(j, "J")?;
    let sec = s.section(&idx)?;
    Ok(Artifact {
        json: json!({"J": j, "polytope": PolytopeDoc::from_polytope(&sec)}),
        table: Some(vertex_table(&sec)),
    })
}

fn lattice_independent(c: &Ctx) -> Out {
    let s = c.polytope()?;
    let ex = independent_exponents(&s)?;
    let mut table = Table::new(indexed("alpha", s.dim()));
    for a in &ex {
        table.push(int_strs(a));
    }
    Ok(Artifact {
        json: json!({ "exponents": ex }),
        table: Some(table),
    })
}

fn lattice_separate(c: &Ctx) -> Out {
    let s = c.polytope()?;
    let z = complex_vec(need(&c.problem.z, "z", c.name)?);
    let w = complex_vec(need(&c.problem.w, "w", c.name)?);
    let cert = separate_points(&s, &z, &w)?;
    if let Some(tol) = c.config.tol {
        if cert.difference <= tol {
            return Err(Error::Inseparable { threshold: tol }.into());
        }
    }
    let mut table = Table::new(["alpha", "kind", "difference"]);
    table.push(vec![
        packed(&int_strs(&cert.alpha)),
        cert.kind.as_str().into(),
        float(cert.difference),
    ]);
    Ok(Artifact {
        json: json!({
            "alpha": cert.alpha,
            "kind": cert.kind.as_str(),
            "difference": cert.difference,
            "z_alpha": complex_json(&[monomial(&z, &cert.alpha)]),
            "w_alpha": complex_json(&[monomial(&w, &cert.alpha)]),
        }),
        table: Some(table),
    })
}

fn lattice_fibers(c: &Ctx) -> Out {
    let s = c.polytope()?;
    let map = fiber_structure(&s)?;
    let mut doc = json!({
        "ell": map.ell,
        "columns": map.columns,
        "kernel": map.kernel,
        "t_vertices": map.t_vertices.iter().map(|v| rat_strs(v)).collect::<Vec<_>>(),
        "minor_gcd": map.minor_gcd().to_string(),
    });
    let mut table = Table::new(["kind".to_string()].into_iter().chain(indexed("c", s.dim())));
    for col in &map.columns {
        table.push(["column".to_string()].into_iter().chain(int_strs(col)).collect());
    }
    for k in &map.kernel {
        table.push(["kernel".to_string()].into_iter().chain(int_strs(k)).collect());
    }
    if let (Some(z), Some(t)) = (&c.problem.z, &c.problem.t) {
        let z = complex_vec(z);
        let t = complex_vec(t);
        let p = map.fiber_point(&z, &t)?;
        doc["fiber_point"] = complex_json(&p);
        doc["image_z"] = complex_json(&map.apply(&z));
        doc["image_fiber_point"] = complex_json(&map.apply(&p));
    }
    Ok(Artifact {
        json: doc,
        table: Some(table),
    })
}

fn lattice_pullback(c: &Ctx) -> Out {
    let alphas = need(&c.problem.alphas, "alphas", c.name)?;
    let inner = *need(&c.problem.inner, "inner", c.name)?;
    let outer = *need(&c.problem.outer, "outer", c.name)?;
    let b = proper_box_pullback(alphas, inner, outer)?;
    let mut table = Table::new(["j", "lower", "upper"]);
    for (j, (lo, hi)) in b.lower.iter().zip(&b.upper).enumerate() {
        table.push(vec![(j + 1).to_string(), float(*lo), float(*hi)]);
    }
    Ok(Artifact {
        json: json!({
            "lower": b.lower,
            "upper": b.upper,
            "inverse": b.inverse.iter().map(|r| rat_strs(r)).collect::<Vec<_>>(),
        }),
        table: Some(table),
    })
}

fn vsk_rows(c: &Ctx, points: Vec<Vec<f64>>) -> Out {
    let s = c.polytope()?;
    let k = c.body(s.dim())?;
    let mut table = Table::new(
        indexed("x", s.dim())
            .into_iter()
            .chain(["value".into(), "maximizer".into()]),
    );
    let mut rows = Vec::new();
    for x in points {
        let v = eval_vsk(&s, &k, &x)?;
        let mut row = floats(&x);
        row.push(float(v.value));
        row.push(packed(&floats(&v.maximizer_s)));
        table.push(row);
        rows.push(json!({
            "x": x,
            "value": v.value,
            "maximizer": v.maximizer_s,
            "active": v.active_a,
        }));
    }
    Ok(Artifact {
        json: json!({ "rows": rows }),
        table: Some(table),
    })
}

fn grid_points(axes: &[input::GridAxis], n: usize) -> Result<Vec<Vec<f64>>, CliError> {
    let axes: Vec<input::GridAxis> = match axes.len() {
        0 => return Err(CliError::Usage("`vsk grid` needs --grid xmin:xmax:steps".into())),
        1 => vec![axes[0]; n],
        len if len == n => axes.to_vec(),
        len => {
            return Err(CliError::Usage(format!(
                "{len} grid axes given for dimension {n}"
            )))
        }
    };
    let values: Vec<Vec<f64>> = axes.iter().map(|a| a.values()).collect();
    let mut out = vec![Vec::new()];
    for vals in &values {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                vals.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    Ok(out)
}

fn vsk_grid(c: &Ctx) -> Out {
    let s = c.polytope()?;
    let axes = if c.config.grid.is_empty() {
        match &c.problem.grid {
            Some(g) => g
                .iter()
                .enumerate()
                .map(|(i, t)| input::GridAxis::parse(t).map_err(|e| CliError::schema(&format!("grid[{i}]"), &e)))
                .collect::<Result<Vec<_>, _>>()?,
            None => Vec::new(),
        }
    } else {
        c.config.grid.clone()
    };
    let pts = grid_points(&axes, s.dim())?;
    vsk_rows(c, pts)
}

fn vsk_hull(c: &Ctx) -> Out {
    let s = c.polytope()?;
    let k = c.body(s.dim())?;
    let mut table = Table::new(
        indexed("x", s.dim())
            .into_iter()
            .chain(["inside".into(), "margin".into()]),
    );
    let mut rows = Vec::new();
    for x in c.float_points()? {
        let cert = hull_membership(&s, &k, &x)?;
        let mut row = floats(&x);
        row.push(cert.is_inside().to_string());
        match &cert {
            HullCertificate::Inside { a, t } => {
                row.push(float(0.0));
                rows.push(json!({"x": x, "inside": true, "a": a, "t": t}));
            }
            HullCertificate::Outside { separator, margin } => {
                row.push(float(*margin));
                rows.push(json!({"x": x, "inside": false, "separator": separator, "margin": margin}));
            }
        }
        table.push(row);
    }
    Ok(Artifact {
        json: json!({ "rows": rows }),
        table: Some(table),
    })
}

fn vsk_siciak(c: &Ctx) -> Out {
    let s = c.polytope()?;
    let k = c.body(s.dim())?;
    let m = c.m()?;
    let phi = MonomialSiciak::new(&s, &k, m, c.budget())?;
    let mut table = Table::new(
        indexed("x", s.dim())
            .into_iter()
            .chain(["value".into(), "alpha".into()]),
    );
    let mut rows = Vec::new();
    for x in c.float_points()? {
        if x.len() != s.dim() {
            return Err(Error::DimensionMismatch {
                expected: s.dim(),
                found: x.len(),
            }
            .into());
        }
        let (value, alpha) = phi.eval(&x);
        let mut row = floats(&x);
        row.push(float(value));
        row.push(packed(&int_strs(&alpha)));
        table.push(row);
        rows.push(json!({"x": x, "value": value, "alpha": alpha}));
    }
    Ok(Artifact {
        json: json!({"m": m, "exponents": phi.num_exponents(), "rows": rows}),
        table: Some(table),
    })
}

fn vsk_axes(c: &Ctx) -> Out {
    let s = c.polytope()?;
    let k = c.body(s.dim())?;
    let j = need(&c.problem.j, "J", c.name)?;
    let idx = input::zero_based(j, "J")?;
    let mut table = Table::new(indexed("x", idx.len()).into_iter().chain(["value".into()]));
    let mut rows = Vec::new();
    for x in c.float_points()? {
        let value = vsk_on_axes(&s, &k, &idx, &x)?;
        let mut row = floats(&x);
        row.push(float(value));
        table.push(row);
        rows.push(json!({"x": x, "value": value}));
    }
    Ok(Artifact {
        json: json!({"J": j, "rows": rows}),
        table: Some(table),
    })
}

fn vsk_sample(c: &Ctx) -> Out {
    let s = c.polytope()?;
    let k = c.body(s.dim())?;
    let depth = c.problem.depth.unwrap_or(DEFAULT_DEPTH);
    let count = c.problem.count.unwrap_or(DEFAULT_COUNT);
    let pts = hull_sampler(&s, &k, depth, count, c.config.seed)?;
    let mut table = Table::new(indexed("x", s.dim()).into_iter().chain(["inside".into()]));
    let mut rows = Vec::new();
    for x in pts {
        let inside = hull_membership(&s, &k, &x)?.is_inside();
        let mut row = floats(&x);
        row.push(inside.to_string());
        table.push(row);
        rows.push(json!({"x": x, "inside": inside}));
    }
    Ok(Artifact {
        json: json!({"seed": c.config.seed, "depth": depth, "rows": rows}),
        table: Some(table),
    })
}

fn approx_run(c: &Ctx) -> Out {
    let s = c.polytope()?;
    let k = c.body(s.dim())?;
    let f = need(&c.problem.series, "series", c.name)?.build(&s)?;
    let n = c.problem.n.unwrap_or(DEFAULT_N);
    let depth = c.problem.depth.unwrap_or(DEFAULT_DEPTH);
    let count = c.problem.count.unwrap_or(DEFAULT_COUNT);
    let mut degrees = c.problem.n_values.clone().unwrap_or_default();
    if !degrees.contains(&n) {
        degrees.push(n);
    }
    degrees.sort_unstable();
    let reports = error_curve(&f, &degrees, &k, depth, count, c.config.seed)?;
    let rel = c.config.tol.unwrap_or(crate::approx::NORM_TOL);
    let mut table = Table::new(["N", "m_N", "sup_err_k", "sup_err_hull", "tail_bound"]);
    let mut curve = Vec::new();
    let mut main = Value::Null;
    for r in &reports {
        let bound = geometric_tail_bound(&f, &k, r.n)?;
        table.push(vec![
            r.n.to_string(),
            r.m_n.to_string(),
            float(r.sup_err_k),
            float(r.sup_err_hull),
            bound.map(float).unwrap_or_default(),
        ]);
        curve.push(json!({
            "N": r.n,
            "m_N": r.m_n,
            "sup_err_k": r.sup_err_k,
            "sup_err_hull": r.sup_err_hull,
            "tail_bound": bound,
        }));
        if r.n == n {
            main = json!({
                "N": r.n,
                "m_N": r.m_n,
                "sup_err_k": r.sup_err_k,
                "sup_err_hull": r.sup_err_hull,
                "sup_f_k": r.sup_f_k,
                "sup_f_hull": r.sup_f_hull,
                "norms_agree": r.sup_f_hull <= r.sup_f_k * (1.0 + rel),
                "k_samples": r.k_samples,
                "hull_samples": r.hull_samples,
                "tail_bound": bound,
            });
        }
    }
    let trunc = truncate(&f, n)?;
    main["witness"] = json!(trunc.witness);
    main["terms"] = json!(trunc.terms.len());
    Ok(Artifact {
        json: json!({"seed": c.config.seed, "depth": depth, "report": main, "curve": curve}),
        table: Some(table),
    })
}

fn barycenter(points: &[Vec<f64>]) -> Vec<f64> {
    let n = points[0].len();
    (0..n)
        .map(|j| points.iter().map(|p| p[j]).sum::<f64>() / points.len() as f64)
        .collect()
}

fn approx_escape(c: &Ctx) -> Out {
    let s = c.polytope()?;
    let beta = need(&c.problem.beta, "beta", c.name)?;
    let x0 = match (&c.problem.x0, &c.problem.body) {
        (Some(x0), _) => x0.clone(),
        (None, Some(_)) => barycenter(&c.body(s.dim())?.full_support_points()?),
        (None, None) => vec![0.0; s.dim()],
    };
    let w = escape_witness(&s, beta, &x0)?;
    let mut table = Table::new(["t", "modulus"]);
    for (t, m) in &w.growth {
        table.push(vec![float(*t), float(*m)]);
    }
    Ok(Artifact {
        json: json!({
            "beta": w.beta,
            "xi": rat_strs(&w.xi),
            "support_xi": rat_str(&s.support(&w.xi)?),
            "x0": w.x0,
            "growth": w.growth.iter().map(|(t, m)| json!({"t": t, "modulus": m})).collect::<Vec<_>>(),
        }),
        table: Some(table),
    })
}

fn approx_domain(c: &Ctx) -> Out {
    let s = c.polytope()?;
    let d = need(&c.problem.domain, "domain", c.name)?;
    let hull = convergence_hull(&s, d.clone())?;
    let tol = c.config.tol.unwrap_or(crate::extremal::HULL_TOL);
    let halfspaces = hull.halfspaces.as_ref().map(|hs| {
        hs.iter()
            .map(|(a, b)| json!({"normal": rat_strs(a), "bound": rat_str(b)}))
            .collect::<Vec<_>>()
    });
    let mut doc = json!({ "halfspaces": halfspaces });
    let table = if c.problem.x.is_some() || c.problem.points.is_some() {
        let mut table = Table::new(indexed("x", s.dim()).into_iter().chain(["inside".into()]));
        let mut rows = Vec::new();
        for x in c.float_points()? {
            let inside = hull.contains_with_tol(&x, tol)?;
            let by_program = hull.contains_by_program(&x)?;
            let mut row = floats(&x);
            row.push(inside.to_string());
            table.push(row);
            rows.push(json!({"x": x, "inside": inside, "inside_by_program": by_program}));
        }
        doc["rows"] = json!(rows);
        table
    } else {
        let mut table = Table::new(indexed("normal", s.dim()).into_iter().chain(["bound".into()]));
        for (a, b) in hull.halfspaces.iter().flatten() {
            table.push(rat_strs(a).into_iter().chain([rat_str(b)]).collect());
        }
        table
    };
    Ok(Artifact {
        json: doc,
        table: Some(table),
    })
}
