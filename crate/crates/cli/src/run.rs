use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use relcone_core::algebra::rational::{format_rational, json_rat_vec};
use relcone_core::algebra::AbelianGroupPresentation;
use relcone_core::cech::{self, CechCochain, CochainSpec, CoverMap, GerbeCocycle, Nerve, RelativeGerbeCocycle};
use relcone_core::chain::{is_quasi_iso, mapping_cone, ChainComplex, ChainMap, Coefficients};
use relcone_core::integrality::{self, models, RelativeCochainPair};
use relcone_core::lie::{self, sun, Alcove, RootSystem, WeightLattice};
use relcone_core::simplicial::{builtins, cone_comparison, DeltaComplex, SimplicialMap};

use crate::job::{from_value, CliError, Command, Job, REPORT_SCHEMA};

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: Command,
    pub input_digest: String,
    pub result: Value,
}

#[derive(Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum SpaceInput {
    Builtin(String),
    Complex(DeltaComplex),
    ChainComplex(ChainComplex),
}

#[derive(Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum MapInput {
    Builtin(String),
    Simplicial(SimplicialMap),
    ChainMap(ChainMap),
    Grid(GridLoop),
}

/// A loop in the triangulated `size × size` grid; the outer boundary when
/// `path` is omitted.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GridLoop {
    size: usize,
    #[serde(default)]
    path: Option<Vec<[usize; 2]>>,
}

impl GridLoop {
    fn build(&self, path: &str) -> Result<(models::Grid, SimplicialMap), CliError> {
        if self.size == 0 {
            return Err(CliError::invalid(format!("{path}.grid.size"), "grid size must be at least 1"));
        }
        let grid = models::Grid::new(self.size);
        let map = match &self.path {
            None => grid.boundary_loop(),
            Some(points) => {
                if let Some(i) = points.iter().position(|p| p[0] > self.size || p[1] > self.size) {
                    return Err(CliError::invalid(format!("{path}.grid.path[{i}]"), "point outside the grid"));
                }
                let points: Vec<(usize, usize)> = points.iter().map(|p| (p[0], p[1])).collect();
                grid.loop_map(&points)
                    .map_err(|e| CliError::invalid(format!("{path}.grid.path"), e))?
            }
        };
        Ok((grid, map))
    }
}

#[derive(Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum NerveInput {
    Builtin(String),
    Nerve(Nerve),
}

#[derive(Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum CoverMapInput {
    Builtin(String),
    CoverMap(CoverMap),
}

fn space(path: &str, s: SpaceInput) -> Result<(String, ChainComplex), CliError> {
    match s {
        SpaceInput::Builtin(name) => {
            let k = builtins::space(&name).map_err(|e| CliError::invalid(format!("{path}.builtin"), e))?;
            Ok((name, k.chain_complex()))
        }
        SpaceInput::Complex(k) => Ok(("complex".into(), k.chain_complex())),
        SpaceInput::ChainComplex(c) => Ok(("chain complex".into(), c)),
    }
}

fn simplicial_map(path: &str, m: MapInput) -> Result<(String, SimplicialMap), CliError> {
    match m {
        MapInput::Builtin(name) => {
            let f = builtins::map(&name).map_err(|e| CliError::invalid(format!("{path}.builtin"), e))?;
            Ok((name, f))
        }
        MapInput::Simplicial(f) => Ok(("map".into(), f)),
        MapInput::Grid(g) => Ok((format!("grid loop ({0}×{0})", g.size), g.build(path)?.1)),
        MapInput::ChainMap(_) => Err(CliError::invalid(
            format!("{path}.chain_map"),
            "this command needs a simplicial map",
        )),
    }
}

fn chain_map(path: &str, m: MapInput) -> Result<(String, ChainMap), CliError> {
    match m {
        MapInput::ChainMap(f) => Ok(("chain map".into(), f)),
        other => simplicial_map(path, other).map(|(n, f)| (n, f.chain_map())),
    }
}

fn nerve(path: &str, n: NerveInput) -> Result<(String, Nerve), CliError> {
    match n {
        NerveInput::Builtin(name) => {
            let nv = cech::nerve::named(&name).map_err(|e| CliError::invalid(format!("{path}.builtin"), e))?;
            Ok((name, nv))
        }
        NerveInput::Nerve(nv) => Ok(("nerve".into(), nv)),
    }
}

fn cover_map(path: &str, m: CoverMapInput) -> Result<(String, CoverMap), CliError> {
    match m {
        CoverMapInput::Builtin(name) => {
            let f = cech::nerve::named_map(&name).map_err(|e| CliError::invalid(format!("{path}.builtin"), e))?;
            Ok((name, f))
        }
        CoverMapInput::CoverMap(f) => Ok(("cover map".into(), f)),
    }
}

fn rats(v: &[BigRational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn group_list(groups: Vec<(i64, AbelianGroupPresentation)>) -> Value {
    Value::Array(
        groups
            .into_iter()
            .map(|(degree, group)| json!({ "degree": degree, "group": group }))
            .collect(),
    )
}

fn to_json<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HomologyPayload {
    space: SpaceInput,
    #[serde(default)]
    coefficients: Coefficients,
}

fn homology(p: &Value) -> Result<Value, CliError> {
    let p: HomologyPayload = from_value("payload", p)?;
    let (name, c) = space("payload.space", p.space)?;
    let groups = c
        .degrees()
        .map(|n| Ok((n, c.homology_with(n, p.coefficients).map_err(CliError::compute)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(json!({
        "space": name,
        "grading": c.grading(),
        "coefficients": p.coefficients,
        "homology": group_list(groups),
        "euler_characteristic": c.euler_characteristic(),
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RelativeHomologyPayload {
    map: MapInput,
    #[serde(default)]
    coefficients: Coefficients,
}

fn relative_homology(p: &Value) -> Result<Value, CliError> {
    let p: RelativeHomologyPayload = from_value("payload", p)?;
    let (name, f) = chain_map("payload.map", p.map)?;
    let cone = mapping_cone(&f).map_err(CliError::compute)?;
    let c = cone.complex();
    let groups = c
        .degrees()
        .map(|n| Ok((n, c.homology_with(n, p.coefficients).map_err(CliError::compute)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(json!({
        "map": name,
        "coefficients": p.coefficients,
        "homology": group_list(groups),
        "quasi_isomorphism": is_quasi_iso(&f).map_err(CliError::compute)?,
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConeComparePayload {
    map: MapInput,
}

fn cone_compare(p: &Value) -> Result<Value, CliError> {
    let p: ConeComparePayload = from_value("payload", p)?;
    let (name, f) = simplicial_map("payload.map", p.map)?;
    let report = cone_comparison(&f).map_err(CliError::compute)?;
    Ok(json!({
        "map": name,
        "agree": report.isomorphic_everywhere(),
        "comparison": to_json(&report),
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CechPayload {
    #[serde(default)]
    nerve: Option<NerveInput>,
    #[serde(default)]
    cover_map: Option<CoverMapInput>,
    #[serde(default)]
    coefficients: Coefficients,
}

fn cech_job(p: &Value) -> Result<Value, CliError> {
    let p: CechPayload = from_value("payload", p)?;
    let coeff = p.coefficients;
    match (p.nerve, p.cover_map) {
        (Some(n), None) => {
            let (name, n) = nerve("payload.nerve", n)?;
            let top = n.dim().map_or(-1, |d| d as i64);
            let groups = (0..=top)
                .map(|q| Ok((q, cech::cech_cohomology(&n, coeff, q).map_err(CliError::compute)?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok(json!({
                "nerve": name,
                "relative": false,
                "coefficients": coeff,
                "simplex_counts": n.counts(),
                "cohomology": group_list(groups),
            }))
        }
        (None, Some(m)) => {
            let (name, m) = cover_map("payload.cover_map", m)?;
            let top = m.source().dim().map_or(0, |d| d as i64 + 1).max(m.target().dim().map_or(-1, |d| d as i64));
            let groups = (0..=top)
                .map(|q| Ok((q, cech::relative_cech_cohomology(&m, coeff, q).map_err(CliError::compute)?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok(json!({
                "cover_map": name,
                "relative": true,
                "coefficients": coeff,
                "cohomology": group_list(groups),
            }))
        }
        _ => Err(CliError::invalid("payload", "give exactly one of `nerve` and `cover_map`")),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GerbePayload {
    nerve: NerveInput,
    cochain: CochainSpec,
}

fn gerbe_class(p: &Value) -> Result<Value, CliError> {
    let p: GerbePayload = from_value("payload", p)?;
    let (name, n) = nerve("payload.nerve", p.nerve)?;
    let a = CechCochain::from_spec(&n, &p.cochain).map_err(|e| CliError::invalid("payload.cochain", e))?;
    let g = GerbeCocycle::new(n, a).map_err(CliError::compute)?;
    let class = g.dixmier_douady_class();
    Ok(json!({
        "nerve": name,
        "class_degree": g.class_degree(),
        "trivial": class.is_zero(),
        "class": to_json(&class),
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RelativeGerbePayload {
    cover_map: CoverMapInput,
    target: CochainSpec,
    source: CochainSpec,
}

fn relative_gerbe_class(p: &Value) -> Result<Value, CliError> {
    let p: RelativeGerbePayload = from_value("payload", p)?;
    let (name, m) = cover_map("payload.cover_map", p.cover_map)?;
    let a = CechCochain::from_spec(m.target(), &p.target).map_err(|e| CliError::invalid("payload.target", e))?;
    let b = CechCochain::from_spec(m.source(), &p.source).map_err(|e| CliError::invalid("payload.source", e))?;
    let g = RelativeGerbeCocycle::new(m, a, b).map_err(CliError::compute)?;
    let rel = g.relative_class().map_err(CliError::compute)?;
    Ok(json!({
        "cover_map": name,
        "class_degree": g.class_degree(),
        "trivial": rel.class.is_zero(),
        "relative_class": to_json(&rel),
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IntegralityPayload {
    map: MapInput,
    degree: usize,
    #[serde(with = "json_rat_vec")]
    source: Vec<BigRational>,
    #[serde(with = "json_rat_vec")]
    target: Vec<BigRational>,
}

fn integrality_job(p: &Value) -> Result<Value, CliError> {
    let p: IntegralityPayload = from_value("payload", p)?;
    let (name, f) = simplicial_map("payload.map", p.map)?;
    let pair = RelativeCochainPair::new(f, p.degree, p.source, p.target).map_err(|e| CliError::invalid("payload", e))?;
    let report = integrality::is_integral(&pair).map_err(CliError::compute)?;
    Ok(json!({ "map": name, "report": to_json(&report) }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BohrSommerfeldPayload {
    map: MapInput,
    #[serde(default, with = "opt_rats")]
    omega: Option<Vec<BigRational>>,
    /// Per-square areas, for grid loops only.
    #[serde(default, with = "opt_rats")]
    areas: Option<Vec<BigRational>>,
}

fn bohr_sommerfeld(p: &Value) -> Result<Value, CliError> {
    let p: BohrSommerfeldPayload = from_value("payload", p)?;
    let (name, f, omega) = match (p.map, p.omega, p.areas) {
        (MapInput::Grid(g), None, Some(areas)) => {
            let (grid, f) = g.build("payload.map")?;
            let omega = grid.area_cochain(&areas).map_err(|e| CliError::invalid("payload.areas", e))?;
            (format!("grid loop ({0}×{0})", g.size), f, omega)
        }
        (_, None, Some(_)) => return Err(CliError::invalid("payload.areas", "`areas` needs a grid map")),
        (m, Some(omega), None) => {
            let (name, f) = simplicial_map("payload.map", m)?;
            (name, f, omega)
        }
        _ => return Err(CliError::invalid("payload", "give exactly one of `omega` and `areas`")),
    };
    let report = integrality::bohr_sommerfeld_check(&f, &omega).map_err(CliError::compute)?;
    Ok(json!({ "map": name, "report": to_json(&report) }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PrequantPayload {
    #[serde(default)]
    model: Option<String>,
    #[serde(default)]
    map: Option<MapInput>,
    #[serde(default, with = "opt_rats")]
    omega: Option<Vec<BigRational>>,
    #[serde(default, with = "opt_rats")]
    eta: Option<Vec<BigRational>>,
    level: i64,
}

mod opt_rats {
    use num_rational::BigRational;
    use relcone_core::algebra::rational::json_rat::Raw;
    use serde::{Deserialize, Deserializer};

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<BigRational>>, D::Error> {
        Option::<Vec<Raw>>::deserialize(d)?
            .map(|v| v.into_iter().map(Raw::into_rational).collect())
            .transpose()
    }
}

fn prequant(p: &Value) -> Result<Value, CliError> {
    let p: PrequantPayload = from_value("payload", p)?;
    let (name, m) = match (p.model.as_deref(), p.map, p.omega, p.eta) {
        (Some("suspended-rp2"), None, None, None) => ("suspended-rp2".to_string(), models::suspended_projective_plane()),
        (Some("ball-in-sphere"), None, None, Some(eta)) => {
            let ints = eta
                .iter()
                .map(|x| {
                    x.is_integer()
                        .then(|| i64::try_from(x.to_integer()).ok())
                        .flatten()
                        .ok_or_else(|| CliError::invalid("payload.eta", "ball-in-sphere takes small integer η"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let m = models::ball_in_sphere(&ints).map_err(|e| CliError::invalid("payload.eta", e))?;
            ("ball-in-sphere".to_string(), m)
        }
        (Some(other), ..) if other != "suspended-rp2" && other != "ball-in-sphere" => {
            return Err(CliError::invalid(
                "payload.model",
                format!("unknown model {other:?} (expected suspended-rp2 or ball-in-sphere)"),
            ));
        }
        (None, Some(map), Some(omega), Some(eta)) => {
            let (name, f) = simplicial_map("payload.map", map)?;
            (name, models::PrequantModel { map: f, omega, eta })
        }
        _ => {
            return Err(CliError::invalid(
                "payload",
                "give `map`, `omega` and `eta`, or `model` (with `eta` for ball-in-sphere)",
            ));
        }
    };
    let report = integrality::prequantization_check(&m.map, &m.omega, &m.eta, p.level).map_err(CliError::compute)?;
    Ok(json!({ "model": name, "report": to_json(&report) }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LiePrequantPayload {
    group: String,
    #[serde(default, with = "opt_rats")]
    xi: Option<Vec<BigRational>>,
    #[serde(default, with = "opt_rats")]
    phases: Option<Vec<BigRational>>,
    level: i64,
    #[serde(default)]
    reduce: bool,
}

fn root_system(group: &str) -> Result<RootSystem, CliError> {
    group.parse().map_err(|e| CliError::invalid("payload.group", e))
}

fn lie_prequant(p: &Value) -> Result<Value, CliError> {
    let p: LiePrequantPayload = from_value("payload", p)?;
    let rs = root_system(&p.group)?;
    let (input, mut xi) = match (p.xi, p.phases) {
        (Some(xi), None) => ("xi", xi),
        (None, Some(phases)) => {
            if rs.family() != lie::Family::A || phases.len() != rs.rank() + 1 {
                return Err(CliError::invalid("payload.phases", format!("eigenphases need SU(n) with n = {}", phases.len())));
            }
            let lambda = sun::sun_normalize_eigenphases(&phases).map_err(|e| CliError::invalid("payload.phases", e))?;
            ("phases", lambda)
        }
        _ => return Err(CliError::invalid("payload", "give exactly one of `xi` and `phases`")),
    };
    if xi.len() != rs.ambient_dim() {
        return Err(CliError::invalid(
            format!("payload.{input}"),
            format!("expected {} coordinates, found {}", rs.ambient_dim(), xi.len()),
        ));
    }
    let mut reflections = 0;
    if p.reduce {
        let red = lie::reduce_to_alcove(&rs, &xi).map_err(|e| CliError::invalid("payload.xi", e))?;
        reflections = red.reflections;
        xi = red.point;
    }
    let v = lie::conjugacy_prequant(&rs, &xi, p.level).map_err(|e| match e {
        lie::LieError::NotInTorus => CliError::invalid(format!("payload.{input}"), e),
        e => CliError::compute(e),
    })?;
    Ok(json!({
        "group": rs.name(),
        "point": rats(&xi),
        "reflections": reflections,
        "level": v.level,
        "in_alcove": v.in_alcove,
        "weight_coordinates": rats(&v.weight_coordinates),
        "in_lattice": v.in_lattice,
        "prequantizable": v.prequantizable,
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LieInfoPayload {
    group: String,
}

fn lie_info(p: &Value) -> Result<Value, CliError> {
    let p: LieInfoPayload = from_value("payload", p)?;
    let rs = root_system(&p.group)?;
    let alcove = Alcove::new(&rs);
    let lattice = WeightLattice::new(&rs);
    let level = lie::min_vertex_level(&rs).map_err(CliError::compute)?;
    let vecs = |v: &[Vec<BigRational>]| v.iter().map(|x| rats(x)).collect::<Vec<_>>();
    Ok(json!({
        "group": rs.name(),
        "family": rs.family().to_string(),
        "rank": rs.rank(),
        "ambient_dim": rs.ambient_dim(),
        "gram": vecs(&rs.gram()),
        "root_count": rs.root_count(),
        "simple_roots": vecs(rs.simple_roots()),
        "cartan": rs.cartan(),
        "highest_root": rats(&rs.highest_root()),
        "marks": rs.marks(),
        "fundamental_weights": vecs(&lattice.weights),
        "alcove_vertices": vecs(&alcove.vertices),
        "min_vertex_level": level,
    }))
}

/// Runs a job and wraps the result with the input digest.
pub fn run(job: &Job) -> Result<Report, CliError> {
    let p = &job.payload;
    let result = match job.command {
        Command::Homology => homology(p),
        Command::RelativeHomology => relative_homology(p),
        Command::ConeCompare => cone_compare(p),
        Command::Cech => cech_job(p),
        Command::GerbeClass => gerbe_class(p),
        Command::RelativeGerbeClass => relative_gerbe_class(p),
        Command::Integrality => integrality_job(p),
        Command::BohrSommerfeld => bohr_sommerfeld(p),
        Command::Prequant => prequant(p),
        Command::LiePrequant => lie_prequant(p),
        Command::LieInfo => lie_info(p),
    }?;
    Ok(Report {
        schema: REPORT_SCHEMA,
        command: job.command,
        input_digest: job.digest(),
        result,
    })
}
