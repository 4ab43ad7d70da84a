//! Self-describing text form of a certificate: one JSON object, every
//! number written as a decimal string, `Q` stored as the integral matrix
//! `ℓ(Q)·Q` next to the level.

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use super::certificate::{evaluate, GcmCertificate, LevelConstraints, LevelPrimeRank};
use crate::error::{Error, Result};
use crate::exactalg::{IntMatrix, RatMatrix};
use crate::graph::{encode_graph6, parse_graph6};

pub const SCHEMA: &str = "walkspec/1";
pub const CERTIFICATE_KIND: &str = "gcm-certificate";

#[derive(Serialize, Deserialize)]
struct PrimeRankDoc {
    prime: String,
    rank: String,
}

#[derive(Serialize, Deserialize)]
struct ConstraintsDoc {
    divides_last_invariant_gcd: bool,
    odd: bool,
    square_free: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateDoc {
    schema: String,
    kind: String,
    order: String,
    graph_g: String,
    graph_h: String,
    level: String,
    scaled_q: Vec<Vec<String>>,
    valid: bool,
    mate: bool,
    is_regular: bool,
    is_orthogonal: bool,
    conjugation_holds: bool,
    is_permutation: bool,
    is_primitive: bool,
    per_prime_ranks: Vec<PrimeRankDoc>,
    level_constraints: ConstraintsDoc,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Certificate(msg.into())
}

fn parse_num<T: std::str::FromStr>(field: &str, s: &str) -> Result<T> {
    s.parse().map_err(|_| bad(format!("{field}: {s:?} is not a decimal integer")))
}

/// Serializes to a single line of JSON.
pub fn certificate_to_json(cert: &GcmCertificate) -> String {
    let scaled = cert.scaled_q();
    let doc = CertificateDoc {
        schema: SCHEMA.into(),
        kind: CERTIFICATE_KIND.into(),
        order: cert.graph_g.order().to_string(),
        graph_g: encode_graph6(&cert.graph_g),
        graph_h: encode_graph6(&cert.graph_h),
        level: cert.level.to_string(),
        scaled_q: (0..scaled.rows()).map(|i| scaled.row(i).iter().map(ToString::to_string).collect()).collect(),
        valid: cert.is_valid(),
        mate: cert.is_mate(),
        is_regular: cert.is_regular,
        is_orthogonal: cert.is_orthogonal,
        conjugation_holds: cert.conjugation_holds,
        is_permutation: cert.is_permutation,
        is_primitive: cert.is_primitive,
        per_prime_ranks: cert
            .per_prime_ranks
            .iter()
            .map(|r| PrimeRankDoc { prime: r.prime.to_string(), rank: r.rank.to_string() })
            .collect(),
        level_constraints: ConstraintsDoc {
            divides_last_invariant_gcd: cert.level_constraints.divides_last_invariant_gcd,
            odd: cert.level_constraints.odd,
            square_free: cert.level_constraints.square_free,
        },
    };
    serde_json::to_string(&doc).expect("certificate documents always serialize")
}

/// Parses a document written by [`certificate_to_json`]. The stored level
/// must be the true level of the stored matrix and every stored flag must
/// match a fresh evaluation.
pub fn certificate_from_json(text: &str) -> Result<GcmCertificate> {
    let doc: CertificateDoc = serde_json::from_str(text.trim()).map_err(|e| bad(e.to_string()))?;
    if doc.schema != SCHEMA {
        return Err(bad(format!("unsupported schema {:?}", doc.schema)));
    }
    if doc.kind != CERTIFICATE_KIND {
        return Err(bad(format!("unexpected kind {:?}", doc.kind)));
    }
    let order: usize = parse_num("order", &doc.order)?;
    let graph_g = parse_graph6(&doc.graph_g)?;
    let graph_h = parse_graph6(&doc.graph_h)?;
    if graph_g.order() != order || graph_h.order() != order {
        return Err(bad("graph orders disagree with the order field"));
    }
    let level: BigInt = parse_num("level", &doc.level)?;
    if level <= BigInt::from(0) {
        return Err(bad("level must be positive"));
    }
    if doc.scaled_q.len() != order || doc.scaled_q.iter().any(|r| r.len() != order) {
        return Err(bad(format!("scaled_q must be {order}x{order}")));
    }
    let entries = doc
        .scaled_q
        .iter()
        .flatten()
        .map(|s| parse_num::<BigInt>("scaled_q", s))
        .collect::<Result<Vec<_>>>()?;
    let scaled = IntMatrix::new(order, order, entries)?;
    let q = RatMatrix::from_scaled(&scaled, &level)?;
    if q.level() != level {
        return Err(bad(format!("level {level} is not the level of the stored matrix ({})", q.level())));
    }
    let stored_ranks = doc
        .per_prime_ranks
        .iter()
        .map(|r| {
            Ok(LevelPrimeRank {
                prime: parse_num::<BigUint>("prime", &r.prime)?,
                rank: parse_num("rank", &r.rank)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    // Every stored predicate is recomputed rather than trusted.
    let cert = evaluate(&graph_g, &graph_h, q)?;
    let c = &doc.level_constraints;
    let consistent = cert.is_regular == doc.is_regular
        && cert.is_orthogonal == doc.is_orthogonal
        && cert.conjugation_holds == doc.conjugation_holds
        && cert.is_permutation == doc.is_permutation
        && cert.is_primitive == doc.is_primitive
        && cert.per_prime_ranks == stored_ranks
        && cert.level_constraints
            == (LevelConstraints {
                divides_last_invariant_gcd: c.divides_last_invariant_gcd,
                odd: c.odd,
                square_free: c.square_free,
            })
        && cert.is_valid() == doc.valid
        && cert.is_mate() == doc.mate;
    if !consistent {
        return Err(bad("stored predicates disagree with the recomputed ones"));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cospectral::verify_pair;
    use crate::samples;

    #[test]
    fn round_trip_is_bit_exact() {
        let cert = verify_pair(&samples::level11_g(), &samples::level11_h()).unwrap();
        let text = certificate_to_json(&cert);
        assert!(!text.contains('\n'));
        assert!(text.starts_with(r#"{"schema":"walkspec/1","kind":"gcm-certificate","order":"9""#));
        let back = certificate_from_json(&text).unwrap();
        assert_eq!(back, cert);
        assert_eq!(certificate_to_json(&back), text);
    }

    #[test]
    fn tampering_is_detected() {
        let cert = verify_pair(&samples::level11_g(), &samples::level11_h()).unwrap();
        let text = certificate_to_json(&cert);
        assert!(certificate_from_json(&text.replace(r#""level":"11""#, r#""level":"33""#)).is_err());
        assert!(certificate_from_json(&text.replace(r#""mate":true"#, r#""mate":false"#)).is_err());
        assert!(certificate_from_json(&text.replace("walkspec/1", "walkspec/2")).is_err());
        assert!(certificate_from_json("{}").is_err());
    }
}
