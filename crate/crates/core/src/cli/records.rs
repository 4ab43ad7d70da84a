//! Output records. Each one serializes to a single JSON line and most also
//! render as human text and CSV rows.

use std::io::{self, Write};

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::cospectral::{BoundReport, GcmCertificate, MateGroup, Violation, SCHEMA};
use crate::error::Error;
use crate::graph::{encode_graph6, Graph, Shard};
use crate::spectral::{format_poly, FamilyClassification, WalkMatrixInfo};

pub(super) fn write_json<T: Serialize>(out: &mut dyn Write, record: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, record)?;
    writeln!(out)
}

/// Rows are buffered so the CSV writer never holds the output stream while
/// other text is written.
pub(super) struct CsvTable {
    header: &'static [&'static str],
    rows: Vec<Vec<String>>,
}

pub(super) fn csv_writer(header: &'static [&'static str]) -> CsvTable {
    CsvTable { header, rows: Vec::new() }
}

impl CsvTable {
    pub(super) fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub(super) fn finish(self, out: &mut dyn Write) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.flush()
    }
}

fn yes(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

/// `-1936 = -1 × 2^4 × 11^2`, in the style `10224 = 2^4 × 3^2 × 71`.
fn factored(value: &BigInt, factorization: &str) -> String {
    if value.is_negative() {
        format!("{value} = -1 × {factorization}")
    } else {
        format!("{value} = {factorization}")
    }
}

#[derive(Serialize)]
pub(super) struct PrimeRankRecord {
    prime: String,
    exponent: String,
    rank: String,
    satisfied: bool,
}

#[derive(Serialize)]
pub(super) struct AnalysisRecord {
    schema: &'static str,
    kind: &'static str,
    line: String,
    graph6: String,
    order: String,
    det_w: String,
    det_factorization: Option<String>,
    controllable: bool,
    two_adic_valuation: Option<String>,
    two_adic_exact: bool,
    normalized_det: Option<String>,
    odd_part: Option<String>,
    last_invariant: Option<String>,
    prime_ranks: Vec<PrimeRankRecord>,
    in_hn: bool,
    in_fn: bool,
    k: String,
    k_last_invariant: String,
    mate_bound: Option<String>,
}

impl AnalysisRecord {
    pub(super) const CSV_HEADER: &'static [&'static str] = &[
        "line",
        "graph6",
        "order",
        "det_w",
        "controllable",
        "two_adic_valuation",
        "normalized_det",
        "odd_part",
        "last_invariant",
        "prime_ranks",
        "in_hn",
        "in_fn",
        "k",
        "k_last_invariant",
        "mate_bound",
        "error",
    ];

    pub(super) fn new(line: usize, g: &Graph, info: &WalkMatrixInfo, class: &FamilyClassification) -> Self {
        Self {
            schema: SCHEMA,
            kind: "analysis",
            line: line.to_string(),
            graph6: encode_graph6(g),
            order: g.order().to_string(),
            det_w: info.determinant.to_string(),
            det_factorization: info.det_factorization().map(|f| f.to_string()),
            controllable: info.controllable,
            two_adic_valuation: opt(&info.two_adic_valuation).into_some_if_nonempty(),
            two_adic_exact: info.two_adic_exact(),
            normalized_det: info.normalized_det.as_ref().map(ToString::to_string),
            odd_part: info.odd_part.as_ref().map(ToString::to_string),
            last_invariant: info.last_invariant().map(ToString::to_string),
            prime_ranks: class
                .per_prime_ranks
                .iter()
                .map(|r| PrimeRankRecord {
                    prime: r.prime.to_string(),
                    exponent: r.exponent.to_string(),
                    rank: r.rank.to_string(),
                    satisfied: r.satisfied,
                })
                .collect(),
            in_hn: class.in_hn,
            in_fn: class.in_fn,
            k: class.k.to_string(),
            k_last_invariant: class.k_last_invariant.to_string(),
            mate_bound: class.mate_bound.map(|b| b.to_string()),
        }
    }

    pub(super) fn write_human(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "{}  (line {}, n = {})", self.graph6, self.line, self.order)?;
        if !self.controllable {
            writeln!(out, "  det W = 0, not controllable, in neither family")?;
            return Ok(());
        }
        let det: BigInt = self.det_w.parse().expect("decimal determinant");
        let f = self.det_factorization.as_deref().unwrap_or("?");
        writeln!(out, "  det W = {}", factored(&det, f))?;
        writeln!(
            out,
            "  2-adic valuation {} ({})",
            opt(&self.two_adic_valuation),
            if self.two_adic_exact { "exactly the forced power" } else { "above the forced power" }
        )?;
        if let (Some(nd), Some(odd)) = (&self.normalized_det, &self.odd_part) {
            writeln!(out, "  normalized det {nd}, |normalized| = {odd}")?;
        }
        if let Some(d) = &self.last_invariant {
            writeln!(out, "  last invariant factor d_n = {d}")?;
        }
        for r in &self.prime_ranks {
            writeln!(
                out,
                "  rank_{} W = {}  ({}^{} divides det W; {})",
                r.prime,
                r.rank,
                r.prime,
                r.exponent,
                if r.satisfied { "rank n-1" } else { "rank below n-1" }
            )?;
        }
        writeln!(out, "  in F_n: {}  in H_n: {}  k = {}", yes(self.in_fn), yes(self.in_hn), self.k)?;
        if self.k != self.k_last_invariant {
            writeln!(out, "  squared primes counted from d_n: {}", self.k_last_invariant)?;
        }
        match &self.mate_bound {
            Some(b) => writeln!(out, "  at most {b} generalized cospectral mate(s)")?,
            None => writeln!(out, "  no mate bound (outside F_n)")?,
        }
        Ok(())
    }

    pub(super) fn csv_row(&self) -> Vec<String> {
        let ranks: Vec<String> = self.prime_ranks.iter().map(|r| format!("{}:{}", r.prime, r.rank)).collect();
        vec![
            self.line.clone(),
            self.graph6.clone(),
            self.order.clone(),
            self.det_w.clone(),
            self.controllable.to_string(),
            opt(&self.two_adic_valuation),
            opt(&self.normalized_det),
            opt(&self.odd_part),
            opt(&self.last_invariant),
            ranks.join(";"),
            self.in_hn.to_string(),
            self.in_fn.to_string(),
            self.k.clone(),
            self.k_last_invariant.clone(),
            opt(&self.mate_bound),
            String::new(),
        ]
    }
}

trait NonEmpty {
    fn into_some_if_nonempty(self) -> Option<String>;
}

impl NonEmpty for String {
    fn into_some_if_nonempty(self) -> Option<String> {
        (!self.is_empty()).then_some(self)
    }
}

#[derive(Serialize)]
pub(super) struct ErrorRecord {
    schema: &'static str,
    kind: &'static str,
    pub(super) line: String,
    offset: Option<String>,
    input: String,
    pub(super) message: String,
}

impl ErrorRecord {
    pub(super) fn new(line: usize, input: &str, e: &Error) -> Self {
        let offset = match e {
            Error::Graph6 { offset, .. } => Some(offset.to_string()),
            _ => None,
        };
        Self {
            schema: SCHEMA,
            kind: "error",
            line: line.to_string(),
            offset,
            input: input.to_string(),
            message: e.to_string(),
        }
    }

    pub(super) fn analysis_csv_row(&self) -> Vec<String> {
        let mut row = vec![String::new(); AnalysisRecord::CSV_HEADER.len()];
        row[0] = self.line.clone();
        row[1] = self.input.clone();
        *row.last_mut().expect("non-empty header") = self.message.clone();
        row
    }
}

#[derive(Serialize)]
pub(super) struct VerdictRecord {
    schema: &'static str,
    kind: &'static str,
    graph_a: String,
    graph_b: String,
    verdict: &'static str,
    reason: String,
}

impl VerdictRecord {
    pub(super) fn new(a: &str, b: &str, verdict: &'static str, e: &Error) -> Self {
        Self {
            schema: SCHEMA,
            kind: "certify-verdict",
            graph_a: a.to_string(),
            graph_b: b.to_string(),
            verdict,
            reason: e.to_string(),
        }
    }
}

pub(super) const CERTIFICATE_CSV_HEADER: &[&str] = &[
    "graph_g",
    "graph_h",
    "level",
    "regular",
    "orthogonal",
    "conjugation_holds",
    "permutation",
    "primitive",
    "level_divides_gcd",
    "level_odd",
    "level_square_free",
    "valid",
    "verdict",
    "reason",
];

pub(super) fn certificate_csv_row(cert: &GcmCertificate, verdict: &str) -> Vec<String> {
    let c = &cert.level_constraints;
    vec![
        encode_graph6(&cert.graph_g),
        encode_graph6(&cert.graph_h),
        cert.level.to_string(),
        cert.is_regular.to_string(),
        cert.is_orthogonal.to_string(),
        cert.conjugation_holds.to_string(),
        cert.is_permutation.to_string(),
        cert.is_primitive.to_string(),
        c.divides_last_invariant_gcd.to_string(),
        c.odd.to_string(),
        c.square_free.to_string(),
        cert.is_valid().to_string(),
        verdict.to_string(),
        String::new(),
    ]
}

pub(super) fn verdict_csv_row(a: &str, b: &str, verdict: &str, e: &Error) -> Vec<String> {
    let mut row = vec![String::new(); CERTIFICATE_CSV_HEADER.len()];
    row[0] = a.to_string();
    row[1] = b.to_string();
    row[12] = verdict.to_string();
    row[13] = e.to_string();
    row
}

pub(super) fn write_certificate_human(out: &mut dyn Write, cert: &GcmCertificate, verdict: &str) -> io::Result<()> {
    let c = &cert.level_constraints;
    writeln!(
        out,
        "G = {}  H = {}  (n = {})",
        encode_graph6(&cert.graph_g),
        encode_graph6(&cert.graph_h),
        cert.graph_g.order()
    )?;
    writeln!(out, "level of Q: {}", cert.level)?;
    writeln!(out, "  Qe = e              {}", yes(cert.is_regular))?;
    writeln!(out, "  Q^T Q = I           {}", yes(cert.is_orthogonal))?;
    writeln!(out, "  Q^T A(G) Q = A(H)   {}", yes(cert.conjugation_holds))?;
    writeln!(out, "  permutation matrix  {}", yes(cert.is_permutation))?;
    writeln!(out, "  primitive           {}", yes(cert.is_primitive))?;
    for r in &cert.per_prime_ranks {
        writeln!(out, "  rank_{} (level * Q) = {}", r.prime, r.rank)?;
    }
    writeln!(
        out,
        "  level divides gcd of last invariant factors {}, odd {}, square-free {}",
        yes(c.divides_last_invariant_gcd),
        yes(c.odd),
        yes(c.square_free)
    )?;
    writeln!(out, "level * Q =")?;
    write!(out, "{}", cert.scaled_q())?;
    writeln!(out, "verdict: {verdict}")
}

#[derive(Serialize)]
struct TallyRecord {
    holds: String,
    fails: String,
    not_applicable: String,
}

#[derive(Serialize)]
struct SizeCount {
    size: String,
    count: String,
}

#[derive(Serialize)]
pub(super) struct SweepRecord {
    schema: &'static str,
    kind: &'static str,
    order: String,
    shard: String,
    classes: String,
    groups: String,
    group_size_histogram: Vec<SizeCount>,
    controllable: String,
    fn_population: String,
    hn_population: String,
    uncertified_groups: String,
    certified_pairs: String,
    checks: std::collections::BTreeMap<String, TallyRecord>,
    violations: Vec<Violation>,
    k_discrepancies: Vec<String>,
    clean: bool,
}

impl SweepRecord {
    pub(super) fn new(r: &BoundReport, shard: Shard) -> Self {
        Self {
            schema: SCHEMA,
            kind: "sweep",
            order: r.order.to_string(),
            shard: format!("{}/{}", shard.index, shard.total),
            classes: r.classes.to_string(),
            groups: r.groups.to_string(),
            group_size_histogram: r
                .group_size_histogram
                .iter()
                .map(|(s, c)| SizeCount { size: s.to_string(), count: c.to_string() })
                .collect(),
            controllable: r.controllable.to_string(),
            fn_population: r.fn_population.to_string(),
            hn_population: r.hn_population.to_string(),
            uncertified_groups: r.uncertified_groups.to_string(),
            certified_pairs: r.certified_pairs.to_string(),
            checks: r
                .checks
                .iter()
                .map(|(k, t)| {
                    (
                        k.clone(),
                        TallyRecord {
                            holds: t.holds.to_string(),
                            fails: t.fails.to_string(),
                            not_applicable: t.not_applicable.to_string(),
                        },
                    )
                })
                .collect(),
            violations: r.violations.clone(),
            k_discrepancies: r.k_discrepancies.clone(),
            clean: r.is_clean(),
        }
    }

    pub(super) fn write_human(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "sweep of order {} (shard {})", self.order, self.shard)?;
        writeln!(out, "  isomorphism classes       {}", self.classes)?;
        writeln!(out, "  spectrum groups           {}", self.groups)?;
        let hist: Vec<String> = self.group_size_histogram.iter().map(|s| format!("{}x{}", s.count, s.size)).collect();
        writeln!(out, "  group sizes (count x size) {}", hist.join(", "))?;
        writeln!(out, "  controllable              {}", self.controllable)?;
        writeln!(out, "  in F_n                    {}", self.fn_population)?;
        writeln!(out, "  in H_n                    {}", self.hn_population)?;
        writeln!(out, "  uncertified groups        {}", self.uncertified_groups)?;
        writeln!(out, "  certified ordered pairs   {}", self.certified_pairs)?;
        writeln!(out, "  check                      holds  fails    n/a")?;
        for (name, t) in &self.checks {
            writeln!(out, "  {name:<24} {:>7} {:>6} {:>6}", t.holds, t.fails, t.not_applicable)?;
        }
        if !self.k_discrepancies.is_empty() {
            writeln!(out, "  squared-prime counts differ (det vs d_n): {}", self.k_discrepancies.join(" "))?;
        }
        for v in &self.violations {
            writeln!(
                out,
                "  VIOLATION {}: G = {}{}: {}",
                v.check,
                v.graph_g,
                v.graph_h.as_ref().map(|h| format!(", H = {h}")).unwrap_or_default(),
                v.detail
            )?;
        }
        writeln!(out, "{} violation(s)", self.violations.len())
    }

    pub(super) fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut t = csv_writer(&["metric", "value"]);
        let mut put = |k: &str, v: &str| t.push(vec![k.to_string(), v.to_string()]);
        put("order", &self.order);
        put("shard", &self.shard);
        put("classes", &self.classes);
        put("groups", &self.groups);
        for s in &self.group_size_histogram {
            put(&format!("groups_of_size_{}", s.size), &s.count);
        }
        put("controllable", &self.controllable);
        put("fn_population", &self.fn_population);
        put("hn_population", &self.hn_population);
        put("uncertified_groups", &self.uncertified_groups);
        put("certified_pairs", &self.certified_pairs);
        for (name, tally) in &self.checks {
            put(&format!("{name}.holds"), &tally.holds);
            put(&format!("{name}.fails"), &tally.fails);
            put(&format!("{name}.not_applicable"), &tally.not_applicable);
        }
        put("violations", &self.violations.len().to_string());
        for v in &self.violations {
            put(&format!("violation.{}", v.check), &format!("{} {}", v.graph_g, v.detail));
        }
        t.finish(out)
    }
}

#[derive(Serialize)]
struct MemberRecord {
    graph6: String,
    controllable: bool,
    det_w: String,
    in_fn: bool,
    in_hn: bool,
    k: String,
    mate_bound: Option<String>,
}

#[derive(Serialize)]
pub(super) struct GroupRecord {
    schema: &'static str,
    kind: &'static str,
    index: String,
    size: String,
    char_poly: String,
    char_poly_complement: String,
    uncertified: bool,
    members: Vec<MemberRecord>,
}

impl GroupRecord {
    pub(super) const CSV_HEADER: &'static [&'static str] =
        &["group", "size", "graph6", "controllable", "det_w", "in_fn", "in_hn", "k", "mate_bound", "uncertified"];

    pub(super) fn new(index: usize, g: &MateGroup) -> Self {
        Self {
            schema: SCHEMA,
            kind: "group",
            index: index.to_string(),
            size: g.len().to_string(),
            char_poly: format_poly(&g.key.char_poly),
            char_poly_complement: format_poly(&g.key.char_poly_complement),
            uncertified: g.uncertified(),
            members: g
                .members
                .iter()
                .zip(&g.walk_info)
                .zip(&g.classifications)
                .map(|((m, w), c)| MemberRecord {
                    graph6: encode_graph6(m),
                    controllable: w.controllable,
                    det_w: w.determinant.to_string(),
                    in_fn: c.in_fn,
                    in_hn: c.in_hn,
                    k: c.k.to_string(),
                    mate_bound: c.mate_bound.map(|b| b.to_string()),
                })
                .collect(),
        }
    }

    pub(super) fn write_human(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(
            out,
            "group {} ({} member(s){})",
            self.index,
            self.size,
            if self.uncertified { ", uncertified: some walk matrix is singular" } else { "" }
        )?;
        writeln!(out, "  char poly            {}", self.char_poly)?;
        writeln!(out, "  complement char poly {}", self.char_poly_complement)?;
        for m in &self.members {
            writeln!(
                out,
                "  {:<12} det W {:>10}  F_n {:<3} H_n {:<3} k {}  bound {}",
                m.graph6,
                m.det_w,
                yes(m.in_fn),
                yes(m.in_hn),
                m.k,
                opt(&m.mate_bound)
            )?;
        }
        Ok(())
    }

    pub(super) fn csv_rows(&self) -> Vec<Vec<String>> {
        self.members
            .iter()
            .map(|m| {
                vec![
                    self.index.clone(),
                    self.size.clone(),
                    m.graph6.clone(),
                    m.controllable.to_string(),
                    m.det_w.clone(),
                    m.in_fn.to_string(),
                    m.in_hn.to_string(),
                    m.k.clone(),
                    opt(&m.mate_bound),
                    self.uncertified.to_string(),
                ]
            })
            .collect()
    }
}

#[derive(Serialize)]
pub(super) struct GroupSummaryRecord {
    schema: &'static str,
    kind: &'static str,
    classes: String,
    groups: String,
    multi_member_groups: String,
    uncertified_groups: String,
    group_size_histogram: Vec<SizeCount>,
}

impl GroupSummaryRecord {
    pub(super) fn new(groups: &[MateGroup]) -> Self {
        let mut hist = std::collections::BTreeMap::<usize, u64>::new();
        for g in groups {
            *hist.entry(g.len()).or_default() += 1;
        }
        Self {
            schema: SCHEMA,
            kind: "group-summary",
            classes: groups.iter().map(MateGroup::len).sum::<usize>().to_string(),
            groups: groups.len().to_string(),
            multi_member_groups: groups.iter().filter(|g| g.len() >= 2).count().to_string(),
            uncertified_groups: groups.iter().filter(|g| g.uncertified()).count().to_string(),
            group_size_histogram: hist
                .into_iter()
                .map(|(s, c)| SizeCount { size: s.to_string(), count: c.to_string() })
                .collect(),
        }
    }

    pub(super) fn write_human(&self, out: &mut dyn Write) -> io::Result<()> {
        let hist: Vec<String> = self.group_size_histogram.iter().map(|s| format!("{}x{}", s.count, s.size)).collect();
        writeln!(
            out,
            "{} classes in {} groups, {} with two or more members ({} uncertified); sizes {}",
            self.classes,
            self.groups,
            self.multi_member_groups,
            self.uncertified_groups,
            hist.join(", ")
        )
    }
}
