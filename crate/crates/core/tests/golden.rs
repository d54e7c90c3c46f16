//! Enumerations at n <= 3 against the checked-in corpus in `tests/golden`.
//! Set `DIAGALG_BLESS=1` to rewrite the files.

use std::path::PathBuf;

use diagalg::diagram::{enumerate, Diagram, FamilyTag};

fn cases() -> Vec<(String, FamilyTag, usize)> {
    let mut out = Vec::new();
    for n in 0..=3 {
        for fam in [
            FamilyTag::RookBrauer,
            FamilyTag::Motzkin,
            FamilyTag::Rook,
            FamilyTag::PlanarRook,
            FamilyTag::Brauer,
            FamilyTag::TemperleyLieb,
            FamilyTag::Blob,
            FamilyTag::DiluteTL,
        ] {
            out.push((format!("{}_{n}", fam.short_name()), fam, n));
        }
        for r in 0..=n {
            out.push((
                format!("walled_{r}_{}", n - r),
                FamilyTag::WalledBrauer { r, s: n - r },
                n,
            ));
        }
    }
    out
}

#[test]
fn enumerations_match_corpus() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let bless = std::env::var_os("DIAGALG_BLESS").is_some();
    for (name, fam, n) in cases() {
        let path = dir.join(format!("{name}.json"));
        let basis = enumerate(fam, n).unwrap();
        if bless {
            let lines: Vec<String> = basis
                .iter()
                .map(|d| serde_json::to_string(d).unwrap())
                .collect();
            let text = format!("[\n{}\n]\n", lines.join(",\n"));
            std::fs::write(&path, text).unwrap();
            continue;
        }
        let text =
            std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let golden: Vec<Diagram> = serde_json::from_str(&text).unwrap();
        assert_eq!(basis, golden, "{name}");
        assert!(golden.iter().all(|d| d.is_member(fam)), "{name}");
    }
}
