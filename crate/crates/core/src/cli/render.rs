use serde::Serialize;

use crate::invariants::{GenusBound, InputKind, InvariantReport, QExperimentRow, Verdict};
use crate::laurent::{LaurentPoly, PolyMatrix, RingSignature, VarNames};
use crate::opgroup::GroupPresentation;

pub(super) struct Format {
    pub json: bool,
    pub alias: bool,
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn ring_text(sig: &RingSignature) -> String {
    let d = sig.components();
    format!(
        "genus {}, {} component{}",
        sig.genus(),
        d,
        if d == 1 { "" } else { "s" }
    )
}

#[derive(Serialize)]
struct MatrixJson<'a> {
    rows: usize,
    cols: usize,
    row_labels: &'a [String],
    col_labels: &'a [String],
    entries: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct ReportJson {
    delta: Vec<String>,
    q_delta0: String,
    rank_delta0: usize,
    rank_presentation: Option<usize>,
    genus_lower_bound: usize,
    caveats: Vec<String>,
    witnesses: ReportWitnesses,
}

#[derive(Serialize)]
struct ReportWitnesses {
    input: &'static str,
    genus: usize,
    components: usize,
    shape: Option<[usize; 2]>,
    delta0_operator_basis: Vec<Vec<i64>>,
    presentation_operator_basis: Option<Vec<Vec<i64>>>,
    bracket: String,
    non_split_asserted: bool,
    virtual_genus: Option<usize>,
}

#[derive(Serialize)]
struct GenusJson<'a> {
    genus_lower_bound: usize,
    rank_delta0: usize,
    virtual_genus: Option<usize>,
    caveats: &'a [String],
}

#[derive(Serialize)]
struct VerdictJson {
    verdict: &'static str,
    bound: Option<usize>,
    examined: usize,
    word_length: Option<usize>,
    phi: Option<Vec<Vec<i64>>>,
    unit: Option<String>,
    grade: &'static str,
}

#[derive(Serialize)]
struct QRowJson {
    file: String,
    components: usize,
    delta0: String,
    q_delta0: String,
    vanishes: bool,
}

impl Format {
    fn names(&self, sig: &RingSignature) -> VarNames {
        VarNames::for_display(sig, self.alias)
    }

    fn poly(&self, p: &LaurentPoly) -> String {
        p.to_string_with(&self.names(p.signature()))
    }

    pub fn matrix(&self, m: &PolyMatrix) -> String {
        let names = self.names(m.signature());
        if self.json {
            let entries = (0..m.rows())
                .map(|i| m.row(i).iter().map(|e| e.to_string_with(&names)).collect())
                .collect();
            return to_json(&MatrixJson {
                rows: m.rows(),
                cols: m.cols(),
                row_labels: m.row_labels(),
                col_labels: m.col_labels(),
                entries,
            });
        }
        let mut s = format!(
            "{}x{} Alexander matrix ({})\n",
            m.rows(),
            m.cols(),
            ring_text(m.signature())
        );
        if m.rows() == 0 {
            s.push_str(&format!(
                "0x{} matrix: no relators; columns {}\n",
                m.cols(),
                m.col_labels().join(" ")
            ));
            return s;
        }
        s.push_str(&m.to_string_with(&names));
        if !s.ends_with('\n') {
            s.push('\n');
        }
        s
    }

    pub fn report(&self, r: &InvariantReport) -> String {
        let virtual_genus = r.genus.determined_genus();
        if self.json {
            return to_json(&ReportJson {
                delta: r.deltas.iter().map(|d| self.poly(d)).collect(),
                q_delta0: self.poly(&r.q_delta0),
                rank_delta0: r.rank_delta0,
                rank_presentation: r.rank_presentation,
                genus_lower_bound: r.genus.bound,
                caveats: r.caveats.clone(),
                witnesses: ReportWitnesses {
                    input: kind_name(r.kind),
                    genus: r.signature.genus(),
                    components: r.signature.components(),
                    shape: r.shape.map(|(m, n)| [m, n]),
                    delta0_operator_basis: r.delta0_basis.clone(),
                    presentation_operator_basis: r.presentation_basis.clone(),
                    bracket: r.bracket(),
                    non_split_asserted: r.genus.non_split_asserted,
                    virtual_genus,
                },
            });
        }
        let mut s = format!(
            "input: {} ({})\n",
            kind_name(r.kind),
            ring_text(&r.signature)
        );
        if let Some((m, n)) = r.shape {
            s.push_str(&format!("Alexander matrix: {m}x{n}\n"));
        }
        for (i, d) in r.deltas.iter().enumerate() {
            s.push_str(&format!("Δ{i} = {}\n", self.poly(d)));
        }
        s.push_str(&format!("q(Δ0) = {}\n", self.poly(&r.q_delta0)));
        s.push_str(&format!("rk_s(Δ0) = {}\n", r.rank_delta0));
        if let Some(rp) = r.rank_presentation {
            s.push_str(&format!("rk_s(P) = {rp}\n"));
        }
        s.push_str(&format!("bracket: {}\n", r.bracket()));
        s.push_str(&format!("genus lower bound: {}\n", r.genus.bound));
        if let Some(g) = virtual_genus {
            s.push_str(&format!(
                "virtual genus: {g} (bound meets the surface genus)\n"
            ));
        }
        for c in &r.caveats {
            s.push_str(&format!("caveat: {c}\n"));
        }
        s
    }

    pub fn delta(&self, i: usize, d: &LaurentPoly) -> String {
        if self.json {
            return to_json(&serde_json::json!({ "index": i, "delta": self.poly(d) }));
        }
        format!("Δ{i} = {}\n", self.poly(d))
    }

    pub fn rank(&self, rank_delta0: usize, rank_p: Option<usize>) -> String {
        if self.json {
            return to_json(&serde_json::json!({
                "rank_delta0": rank_delta0,
                "rank_presentation": rank_p,
            }));
        }
        let mut s = format!("rk_s(Δ0) = {rank_delta0}\n");
        if let Some(rp) = rank_p {
            s.push_str(&format!("rk_s(P) = {rp}\n"));
        }
        s
    }

    pub fn genus_bound(&self, g: &GenusBound) -> String {
        if self.json {
            return to_json(&GenusJson {
                genus_lower_bound: g.bound,
                rank_delta0: g.rank,
                virtual_genus: g.determined_genus(),
                caveats: &g.caveats,
            });
        }
        let mut s = format!("genus lower bound: {} (rk_s(Δ0) = {})\n", g.bound, g.rank);
        if let Some(v) = g.determined_genus() {
            s.push_str(&format!(
                "virtual genus: {v} (bound meets the surface genus)\n"
            ));
        }
        for c in &g.caveats {
            s.push_str(&format!("caveat: {c}\n"));
        }
        s
    }

    pub fn hat(&self, h: &GroupPresentation) -> String {
        if self.json {
            let rels: Vec<String> = h.relators().iter().map(|w| h.word_text(w)).collect();
            return to_json(&serde_json::json!({ "generators": h.generators(), "relators": rels }));
        }
        format!("{h}\n")
    }

    pub fn transform(&self, label: &str, input: &LaurentPoly, out: &LaurentPoly) -> String {
        if self.json {
            return to_json(&serde_json::json!({
                "operation": label,
                "input": self.poly(input),
                "output": self.poly(out),
            }));
        }
        format!("{}\n", self.poly(out))
    }

    pub fn verdict(&self, p: &LaurentPoly, v: &Verdict) -> String {
        let sig = p.signature();
        let json = match v {
            Verdict::Found {
                phi,
                unit,
                word_length,
                examined,
            } => VerdictJson {
                verdict: "FOUND",
                bound: None,
                examined: *examined,
                word_length: Some(*word_length),
                phi: Some(phi.rows()),
                unit: Some(self.poly(&unit.to_poly(sig))),
                grade: "proof: Δ0(t^-1) = unit * φ♯(Δ0) verified exactly",
            },
            Verdict::NotFoundWithinBound { bound, examined } => VerdictJson {
                verdict: "NOT_FOUND_WITHIN_BOUND",
                bound: Some(*bound),
                examined: *examined,
                word_length: None,
                phi: None,
                unit: None,
                grade: "evidence only: longer words in Sp(2g, Z) were not searched",
            },
        };
        if self.json {
            return to_json(&json);
        }
        let mut s = format!("verdict: {}\n", json.verdict);
        match v {
            Verdict::Found {
                phi, word_length, ..
            } => {
                s.push_str(&format!("word length: {word_length}\n"));
                s.push_str(&format!("phi: {phi}\n"));
                s.push_str(&format!("unit: {}\n", json.unit.as_deref().unwrap_or("")));
            }
            Verdict::NotFoundWithinBound { bound, .. } => {
                s.push_str(&format!("bound: {bound}\n"));
            }
        }
        s.push_str(&format!("examined: {}\n", json.examined));
        s.push_str(&format!("grade: {}\n", json.grade));
        s
    }

    pub fn q_table(&self, rows: &[(String, QExperimentRow)]) -> String {
        let items: Vec<QRowJson> = rows
            .iter()
            .map(|(f, r)| QRowJson {
                file: f.clone(),
                components: r.components,
                delta0: self.poly(&r.delta0),
                q_delta0: self.poly(&r.q_delta0),
                vanishes: r.vanishes(),
            })
            .collect();
        if self.json {
            return to_json(&items);
        }
        let mut s = String::from("file\tcomponents\tq(Δ0)\tvanishes\n");
        for it in &items {
            s.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                it.file,
                it.components,
                it.q_delta0,
                if it.vanishes { "yes" } else { "no" }
            ));
        }
        let zero = items.iter().filter(|i| i.vanishes).count();
        s.push_str(&format!("q(Δ0) = 0 in {zero} of {} inputs\n", items.len()));
        s
    }
}

fn kind_name(k: InputKind) -> &'static str {
    match k {
        InputKind::Presentation => "presentation",
        InputKind::Matrix => "matrix",
        InputKind::Polynomial => "polynomial",
    }
}
