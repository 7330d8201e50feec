use std::path::PathBuf;

use clap::{Args, Subcommand};
use serde_json::{json, Value};

use super::read_file;
use crate::altspace::{
    delta_space_with_witness, is_fully_connected, kappa_gt_lambda_instance, kappa_space, lambda_space, AltMatrixSpace,
};
use crate::error::{Error, Result};
use crate::gf::{Field, Subspace};
use crate::graph::{edge_connectivity, min_degree, parse_graph, vertex_connectivity};
use crate::group::{
    central_decomposition, deg_element, deg_element_scan, degree_scan, delta_group, kappa_group, kappa_group_fast,
    lambda_group, lambda_group_fast, BaerGroup, CentralDecomposition, GroupElement, GroupJson, Section,
    SubgroupDescriptor,
};
use crate::limits::Limits;

/// Where a matrix space comes from.
#[derive(Debug, Clone, Args)]
pub struct SpaceInput {
    /// Matrix-space JSON file.
    #[arg(conflicts_with_all = ["graph", "counterexample"])]
    pub file: Option<PathBuf>,
    /// Build 𝒜_G from an edge-list file instead.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Build the κ > λ instance with blocks of sizes S and T instead.
    #[arg(long, num_args = 2, value_names = ["S", "T"])]
    pub counterexample: Option<Vec<usize>>,
}

impl SpaceInput {
    pub fn load(&self, q: u32) -> Result<AltMatrixSpace> {
        match (&self.file, &self.graph, &self.counterexample) {
            (Some(f), None, None) => AltMatrixSpace::from_json_str(&read_file(f)?),
            (None, Some(g), None) => Ok(AltMatrixSpace::from_graph(
                &parse_graph(&read_file(g)?)?,
                Field::new(q)?,
            )),
            (None, None, Some(st)) => kappa_gt_lambda_instance(st[0], st[1], Field::new(q)?),
            _ => Err(Error::InvalidArgument(
                "give exactly one of a space file, --graph or --counterexample".into(),
            )),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum SpaceCommand {
    /// Print the canonical basis as matrix-space JSON.
    Build(SpaceInput),
    /// Vertex connectivity κ with a witness subspace W.
    Kappa(SpaceInput),
    /// Edge connectivity λ with a witness pair U, V.
    Lambda(SpaceInput),
    /// Minimum degree δ with a witness vector.
    Delta(SpaceInput),
    /// Whether every pair of independent vectors is seen by the space.
    Fullconn(SpaceInput),
}

/// Where a group comes from.
#[derive(Debug, Clone, Args)]
pub struct GroupInput {
    /// Group JSON file.
    #[arg(conflicts_with = "graph")]
    pub file: Option<PathBuf>,
    /// Build P_G from an edge-list file instead.
    #[arg(long)]
    pub graph: Option<PathBuf>,
}

impl GroupInput {
    pub fn load(&self, p: u32) -> Result<BaerGroup> {
        match (&self.file, &self.graph) {
            (Some(f), None) => {
                let j: GroupJson = serde_json::from_str(&read_file(f)?)?;
                BaerGroup::from_json(&j)
            }
            (None, Some(g)) => BaerGroup::from_graph(&parse_graph(&read_file(g)?)?, p),
            _ => Err(Error::InvalidArgument(
                "give exactly one of a group file or --graph".into(),
            )),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct DeltaArgs {
    #[command(flatten)]
    pub input: GroupInput,
    /// Also count centralizers element by element.
    #[arg(long)]
    pub scan: bool,
    /// Report the degree of this element, written "v1,...;u1,...".
    #[arg(long, allow_hyphen_values = true)]
    pub element: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum GroupCommand {
    /// Print the group JSON with its order.
    Build(GroupInput),
    /// κ(P) over regular subgroups.
    Kappa(GroupInput),
    /// λ(P) over central subgroups.
    Lambda(GroupInput),
    /// δ(P) from centralizer sizes.
    Delta(DeltaArgs),
    /// Search for a central decomposition of P.
    Decompose(GroupInput),
}

/// `graph-conn`: κ, λ, δ with 1-indexed witnesses.
pub fn cmd_graph_conn(text: &str) -> Result<Value> {
    let g = parse_graph(text)?;
    let vc = vertex_connectivity(&g);
    let ec = edge_connectivity(&g);
    let one = |v: usize| v + 1;
    Ok(json!({
        "kappa": vc.kappa,
        "lambda": ec.lambda,
        "delta": min_degree(&g),
        "separator": vc.separator.map(|s| s.into_iter().map(one).collect::<Vec<_>>()),
        "cut": ec.cut.iter().map(|&(a, b)| [one(a), one(b)]).collect::<Vec<_>>(),
    }))
}

pub fn cmd_space(cmd: &SpaceCommand, q: u32, limits: &Limits) -> Result<Value> {
    Ok(match cmd {
        SpaceCommand::Build(input) => {
            let s = input.load(q)?;
            let mut v = serde_json::to_value(s.to_json())?;
            v["dim"] = json!(s.dim());
            v
        }
        SpaceCommand::Kappa(input) => serde_json::to_value(kappa_space(&input.load(q)?, limits)?.to_json())?,
        SpaceCommand::Lambda(input) => {
            let r = lambda_space(&input.load(q)?, limits)?;
            serde_json::to_value(r.witness.to_json(r.lambda))?
        }
        SpaceCommand::Delta(input) => {
            let (delta, v) = delta_space_with_witness(&input.load(q)?);
            json!({ "delta": delta, "v": v })
        }
        SpaceCommand::Fullconn(input) => {
            let s = input.load(q)?;
            limits.check_n("full connectivity", s.n())?;
            json!({ "fully_connected": is_fully_connected(&s) })
        }
    })
}

fn descriptor_json(d: &SubgroupDescriptor) -> Value {
    match d {
        SubgroupDescriptor::Structured { u, x } => json!({ "U": u.basis_i64(), "X": x.basis_i64() }),
        SubgroupDescriptor::Explicit(elems) => json!(elems.iter().map(|e| e.to_string()).collect::<Vec<_>>()),
    }
}

fn basis(s: &Subspace) -> Value {
    json!(s.basis_i64())
}

pub fn cmd_group(cmd: &GroupCommand, p: u32, limits: &Limits) -> Result<Value> {
    Ok(match cmd {
        GroupCommand::Build(input) => {
            let g = input.load(p)?;
            let mut v = serde_json::to_value(g.to_json())?;
            v["order_exp"] = json!(g.order_exp());
            v["order"] = json!(g.order());
            v
        }
        GroupCommand::Kappa(input) => {
            let g = input.load(p)?;
            match kappa_group(&g, limits) {
                Ok((k, u)) => json!({ "kappa": k, "U": basis(&u), "method": "structured" }),
                Err(Error::GuardExceeded(_)) => {
                    json!({ "kappa": kappa_group_fast(&g, limits)?, "method": "commutator-map" })
                }
                Err(e) => return Err(e),
            }
        }
        GroupCommand::Lambda(input) => {
            let g = input.load(p)?;
            match lambda_group(&g, limits) {
                Ok((l, x)) => json!({ "lambda": l, "X": basis(&x), "method": "structured" }),
                Err(Error::GuardExceeded(_)) => {
                    json!({ "lambda": lambda_group_fast(&g, limits)?, "method": "commutator-map" })
                }
                Err(e) => return Err(e),
            }
        }
        GroupCommand::Delta(args) => {
            let g = args.input.load(p)?;
            let mut v = json!({ "delta": delta_group(&g) });
            if args.scan {
                let (min, max) = degree_scan(&g, limits)?;
                v["delta_scan"] = json!(min);
                v["max_degree"] = json!(max);
            }
            if let Some(text) = &args.element {
                let h = GroupElement::parse(text, g.field(), g.n(), g.m())?;
                v["element"] = json!(h.to_string());
                v["degree"] = json!(deg_element(&g, &h));
                if args.scan {
                    v["degree_scan"] = json!(deg_element_scan(&g, &h, limits)?);
                }
            }
            v
        }
        GroupCommand::Decompose(input) => {
            let g = input.load(p)?;
            limits.check_group("central decomposition", g.p(), g.order_exp())?;
            match central_decomposition(&g, &Section::whole(&g)) {
                CentralDecomposition::Split(j, k) => json!({
                    "decomposable": true,
                    "J": descriptor_json(&j),
                    "K": descriptor_json(&k),
                }),
                CentralDecomposition::Conventional => json!({ "decomposable": true, "J": null, "K": null }),
                CentralDecomposition::Indecomposable => json!({ "decomposable": false }),
            }
        }
    })
}
