use clap::ValueEnum;
use num_complex::Complex64;
use qfusion::plactic::{format_word, MultiPartition, RuleApplication, Tableau};
use qfusion::spectral::SMatrix;
use qfusion::suites::SuiteReport;
use serde_json::{json, Value};

use crate::compute::Entries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

pub struct TableOutput {
    pub params: Value,
    pub method: &'static str,
    pub agreement: bool,
    pub mismatches: Vec<String>,
    pub entries: Entries,
}

fn records(e: &Entries) -> Vec<Value> {
    e.iter()
        .map(|((l, m, n), (d, c))| {
            json!({"lambda": l.to_string(), "mu": m.to_string(), "nu": n.to_string(), "d": d, "c": c})
        })
        .collect()
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

impl TableOutput {
    pub fn print(&self, f: Format) {
        match f {
            Format::Json => {
                let mut v = json!({
                    "params": self.params,
                    "entries": records(&self.entries),
                    "method": self.method,
                    "agreement": self.agreement,
                });
                if !self.mismatches.is_empty() {
                    v["mismatches"] = json!(self.mismatches);
                }
                print_json(&v);
            }
            Format::Csv => {
                println!("lambda,mu,nu,d,c");
                for ((l, m, n), (d, c)) in &self.entries {
                    println!("\"{l}\",\"{m}\",\"{n}\",{d},{c}");
                }
            }
            Format::Pretty => {
                println!("# {} method={} agreement={}", self.params, self.method, self.agreement);
                let var = if self.params["kind"] == "fusion" { "z" } else { "q" };
                let mut cur: Option<(String, String)> = None;
                for ((l, m, n), (d, c)) in &self.entries {
                    let key = (l.to_string(), m.to_string());
                    if cur.as_ref() != Some(&key) {
                        println!("({}) * ({}):", key.0, key.1);
                        cur = Some(key);
                    }
                    let pow = match d {
                        0 => String::new(),
                        1 => format!("{var} "),
                        _ => format!("{var}^{d} "),
                    };
                    println!("    {c} {pow}({n})");
                }
                for m in &self.mismatches {
                    println!("! {m}");
                }
            }
        }
    }
}

fn cstr(z: Complex64) -> String {
    format!("{:.12}{:+.12}i", z.re, z.im)
}

pub fn print_smatrix(f: Format, n: usize, k: usize, s: &SMatrix, t: &[Complex64]) {
    let labels: Vec<String> = s.basis.iter().map(|w| w.to_partition().to_string()).collect();
    match f {
        Format::Json => print_json(&json!({
            "params": {"n": n, "k": k},
            "basis": labels,
            "S": s.entries.iter().map(|r| r.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "T": t.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            println!("row,col,re,im");
            for (i, r) in s.entries.iter().enumerate() {
                for (j, z) in r.iter().enumerate() {
                    println!("\"{}\",\"{}\",{},{}", labels[i], labels[j], z.re, z.im);
                }
            }
        }
        Format::Pretty => {
            println!("# S-matrix, n={n} k={k}; rows/columns: {}", labels.join("  "));
            for r in &s.entries {
                println!("{}", r.iter().map(|z| cstr(*z)).collect::<Vec<_>>().join("  "));
            }
            println!("# T diagonal");
            println!("{}", t.iter().map(|z| cstr(*z)).collect::<Vec<_>>().join("  "));
        }
    }
}

pub fn print_suite(f: Format, rep: &SuiteReport) {
    match f {
        Format::Json => print_json(&json!({"suite": rep.suite, "ok": rep.ok(), "checks": rep.checks})),
        Format::Csv => {
            println!("check,ok,numeric,detail");
            for c in &rep.checks {
                println!(
                    "\"{}\",{},{},\"{}\"",
                    c.name,
                    c.ok,
                    c.numeric,
                    c.detail.replace('"', "'")
                );
            }
        }
        Format::Pretty => {
            println!("# {}", rep.suite);
            for c in &rep.checks {
                println!("[{}] {}  {}", if c.ok { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
        }
    }
}

pub fn print_normalize(f: Format, t: &Tableau, d: &Tableau, word: &str, log: Option<&[RuleApplication]>) {
    let rows = |x: &Tableau| x.rows().to_vec();
    match f {
        Format::Json => {
            let mut v = json!({"input": rows(t), "output": rows(d), "column_word": word, "strict": d.is_strict()});
            if let Some(l) = log {
                v["rules"] = json!(l
                    .iter()
                    .map(|r| json!({"rule": r.rule.label(), "column": r.column, "value": r.value}))
                    .collect::<Vec<_>>());
            }
            print_json(&v);
        }
        Format::Csv => println!("{d}"),
        Format::Pretty => {
            println!("T:\n{t}\nD(T):\n{d}\ncolumn word: {word}");
            if let Some(l) = log {
                let s: Vec<String> = l
                    .iter()
                    .map(|r| format!("{}@{}:{}", r.rule.label(), r.column, r.value))
                    .collect();
                println!("rules: {}", s.join(" "));
            }
        }
    }
}

pub fn print_dengdu(f: Format, n: usize, w: &[usize], pi: &MultiPartition, standard: &[usize]) {
    match f {
        Format::Json => print_json(&json!({
            "n": n,
            "word": format_word(w),
            "multipartition": pi.components().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "aperiodic": pi.is_aperiodic(),
            "standard_word": format_word(standard),
        })),
        Format::Csv => println!("{},{},{}", format_word(w), pi, format_word(standard)),
        Format::Pretty => {
            println!("word:           {}", format_word(w));
            println!("multipartition: {pi}");
            println!("standard word:  {}", format_word(standard));
        }
    }
}
