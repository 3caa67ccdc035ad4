//! Report shapes and the two output formats. JSON is one compact object per
//! line with a field order fixed by the struct definitions; the table format
//! is for reading, not parsing.

use clap::ValueEnum;
use serde::Serialize;

use gfree_core::minimality::MinimalityReport;
use gfree_core::solver::Partition;
use gfree_core::verify::{BoundCheck, ScanReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Serialize)]
pub struct ChiReport {
    pub graph6: String,
    pub pattern: String,
    pub chi: usize,
    pub witness: Partition,
    pub nodes: u64,
}

#[derive(Serialize)]
pub struct UniqueReport {
    pub graph6: String,
    pub pattern: String,
    pub chi: usize,
    pub unique: bool,
    pub partitions: Vec<Partition>,
    pub cap_hit: bool,
}

#[derive(Serialize)]
pub struct MinimalReport {
    pub graph6: String,
    pub pattern: String,
    pub base_chi: usize,
    pub vertex: MinimalityReport,
    /// Absent when the host has no edges.
    pub edge: Option<MinimalityReport>,
}

fn json_line<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("reports serialize"));
}

fn classes_display(p: &Partition) -> String {
    let inner: Vec<String> = p
        .to_lists()
        .iter()
        .map(|c| {
            let elems: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            format!("{{{}}}", elems.join(","))
        })
        .collect();
    inner.join(" ")
}

impl Format {
    pub fn emit_chi(self, r: &ChiReport) {
        match self {
            Format::Json => json_line(r),
            Format::Table => println!(
                "{}  pattern={}  chi={}  nodes={}  witness: {}",
                r.graph6,
                r.pattern,
                r.chi,
                r.nodes,
                classes_display(&r.witness)
            ),
        }
    }

    pub fn emit_unique(self, r: &UniqueReport) {
        match self {
            Format::Json => json_line(r),
            Format::Table => {
                let shown: Vec<String> = r.partitions.iter().map(classes_display).collect();
                println!(
                    "{}  pattern={}  chi={}  unique={}  cap_hit={}  partitions: {}",
                    r.graph6,
                    r.pattern,
                    r.chi,
                    r.unique,
                    r.cap_hit,
                    shown.join(" | ")
                );
            }
        }
    }

    pub fn emit_minimal(self, r: &MinimalReport) {
        match self {
            Format::Json => json_line(r),
            Format::Table => {
                let edge = match &r.edge {
                    Some(e) => format!("edge_minimal={} (strict={})", e.minimal, e.strict_equality),
                    None => "no edges".to_string(),
                };
                println!(
                    "{}  pattern={}  chi={}  vertex_minimal={} (strict={})  {}",
                    r.graph6, r.pattern, r.base_chi, r.vertex.minimal, r.vertex.strict_equality, edge
                );
            }
        }
    }

    pub fn emit_checks(self, checks: &[BoundCheck]) {
        match self {
            Format::Json => {
                for c in checks {
                    json_line(c);
                }
            }
            Format::Table => {
                for c in checks {
                    println!(
                        "{:<7} {:<5} lhs={:<6} rhs={:<6} {}  // {}",
                        c.theorem_id.to_string(),
                        if c.holds { "holds" } else { "FAILS" },
                        c.lhs,
                        c.rhs,
                        c.instance.graph6,
                        c.notes
                    );
                }
            }
        }
    }

    pub fn emit_scan(self, report: &ScanReport) {
        match self {
            Format::Json => json_line(report),
            Format::Table => {
                println!(
                    "scanned={}  hypotheses_met={}  violations={}",
                    report.scanned,
                    report.hypotheses_met,
                    report.violations.len()
                );
                for v in &report.violations {
                    println!(
                        "  {:<7} lhs={:<6} rhs={:<6} {}  // {}",
                        v.theorem_id.to_string(),
                        v.lhs,
                        v.rhs,
                        v.instance.graph6,
                        v.notes
                    );
                }
            }
        }
    }
}
