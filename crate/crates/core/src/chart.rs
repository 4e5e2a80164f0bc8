//! Defining equations of an open Hilbert-scheme chart.
//!
//! For an extremal base ideal `J` equigenerated in degree `m` with
//! `r = dim J_m`, the chart of the Grassmannian `Grass(r, S_m)` around
//! `[J_m]` parametrizes ideals by generators `f_A = x^A + sum c_AB x^B`.
//! Multiplying each generator by each variable and extracting coefficients
//! gives a matrix over the polynomial ring in the chart parameters whose
//! rank in degree `m+1` must stay at `dim J_{m+1}`; the vanishing of all
//! `(dim J_{m+1} + 1)`-minors cuts out exactly the locus where persistence
//! applies.

use rayon::prelude::*;

use num_traits::One;

use crate::detpoly::det_poly;
use crate::error::{Error, Result};
use crate::extremal::{find_extremal_weight, WeightSearch};
use crate::groebner::{buchberger, trim_generators, GroebnerBasis};
use crate::ideal::MonomialIdeal;
use crate::matrix::QMatrix;
use crate::monomial::{count_monomials, monomials_of_degree, Monomial};
use crate::order::TermOrder;
use crate::persistence::ChartPoint;
use crate::poly::MultiPoly;
use crate::rat::Rat;
use crate::ring::PolyRing;

/// The generic point of the chart: generators over a combined ring carrying
/// both the base variables and one parameter per `(member, standard)` pair.
#[derive(Clone)]
pub struct SymbolicChart {
    base: MonomialIdeal,
    m: u32,
    members: Vec<Monomial>,
    standard: Vec<Monomial>,
    param_ring: PolyRing,
    combined_ring: PolyRing,
    generators: Vec<MultiPoly>,
}

/// The degree-`(m+1)` coefficient matrix of the symbolic chart: rows are the
/// products `x_j * f_A` (members outermost, variables innermost), columns
/// the degree-`(m+1)` monomials descending lexicographically, entries
/// polynomials in the parameters alone (each a 0, a 1, or one parameter).
#[derive(Clone)]
pub struct ChartMatrix {
    param_ring: PolyRing,
    base_ring: PolyRing,
    rows: Vec<(usize, Monomial)>,
    cols: Vec<Monomial>,
    entries: Vec<Vec<MultiPoly>>,
}

/// Counts from a minor enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinorCensus {
    pub size: usize,
    pub candidates: usize,
    pub nonzero: usize,
}

/// Everything the worked-example pipeline produces.
pub struct ChartReport {
    pub matrix: ChartMatrix,
    pub census: MinorCensus,
    pub trimmed: Vec<MultiPoly>,
    pub groebner: GroebnerBasis,
    pub dimension: usize,
}

/// Sizes of the Grassmannian ambient spaces for one ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannianEmbedding {
    pub regularity: u32,
    pub subspace_dim: usize,
    pub ambient_dim: usize,
    pub chart_dim: usize,
}

/// Side-by-side ambient sizes for the extremal chart and the lex embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannianReport {
    pub base: GrassmannianEmbedding,
    pub lex: GrassmannianEmbedding,
}

impl SymbolicChart {
    /// Builds the generic chart around `[J_m]`. The base must be Borel-fixed
    /// with a certified extremal weight; a base with mixed generator degrees
    /// is truncated at its regularity first. Parameters are named `A`, `B`,
    /// `C`, ... member-major when the alphabet suffices and `c<i>_<j>`
    /// otherwise.
    pub fn new(base: &MonomialIdeal) -> Result<Self> {
        match find_extremal_weight(base)? {
            WeightSearch::Found { .. } => {}
            WeightSearch::Infeasible { .. } => return Err(Error::NotExtremal),
        }
        let origin = ChartPoint::origin(base)?;
        let base = origin.base().clone();
        let m = origin.degree();
        let members = origin.members().to_vec();
        let standard = origin.standard().to_vec();
        if standard.is_empty() {
            return Err(Error::OutOfRange(
                "chart has no free coefficients: the base fills its whole degree".into(),
            ));
        }
        let count = members.len() * standard.len();
        let base_names: Vec<String> = base.ring().var_names().to_vec();
        let letters: Vec<String> = (0..26).map(|i| ((b'A' + i) as char).to_string()).collect();
        let param_names: Vec<String> = if count <= 26
            && letters[..count].iter().all(|l| !base_names.contains(l))
        {
            letters[..count].to_vec()
        } else {
            (0..members.len())
                .flat_map(|i| (0..standard.len()).map(move |j| format!("c{i}_{j}")))
                .collect()
        };
        let param_ring = PolyRing::from_names(param_names.clone())?;
        let mut combined = base_names;
        combined.extend(param_names);
        let combined_ring = PolyRing::from_names(combined)?;

        let nb = base.ring().nvars();
        let np = param_ring.nvars();
        let lift = |mon: &Monomial, param: Option<usize>| -> Monomial {
            let mut exps = vec![0u32; nb + np];
            exps[..nb].copy_from_slice(mon.exps());
            if let Some(p) = param {
                exps[nb + p] = 1;
            }
            Monomial::new(exps)
        };
        let mut generators = Vec::new();
        for (i, a) in members.iter().enumerate() {
            let mut f = MultiPoly::from_monomial(&combined_ring, lift(a, None), Rat::one());
            for (j, b) in standard.iter().enumerate() {
                let p = i * standard.len() + j;
                f = &f
                    + &MultiPoly::from_monomial(&combined_ring, lift(b, Some(p)), Rat::one());
            }
            generators.push(f);
        }
        Ok(SymbolicChart {
            base,
            m,
            members,
            standard,
            param_ring,
            combined_ring,
            generators,
        })
    }

    pub fn base(&self) -> &MonomialIdeal {
        &self.base
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn members(&self) -> &[Monomial] {
        &self.members
    }

    pub fn standard(&self) -> &[Monomial] {
        &self.standard
    }

    pub fn param_ring(&self) -> &PolyRing {
        &self.param_ring
    }

    pub fn combined_ring(&self) -> &PolyRing {
        &self.combined_ring
    }

    /// Generators over the combined ring, parameters acting as coefficients.
    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn param_name(&self, member: usize, standard: usize) -> &str {
        self.param_ring
            .var_name(member * self.standard.len() + standard)
    }

    /// Specializes the parameters to the coefficients of a chart point over
    /// the same base, giving generators back in the base ring.
    pub fn evaluate(&self, point: &ChartPoint) -> Result<Vec<MultiPoly>> {
        if point.base() != &self.base {
            return Err(Error::RingMismatch(
                "chart point belongs to a different base ideal".into(),
            ));
        }
        Ok(point.generators())
    }

    /// The parameter values of a chart point, in parameter-ring order.
    pub fn parameter_values(&self, point: &ChartPoint) -> Result<Vec<Rat>> {
        if point.base() != &self.base {
            return Err(Error::RingMismatch(
                "chart point belongs to a different base ideal".into(),
            ));
        }
        let mut values = Vec::with_capacity(self.param_ring.nvars());
        for a in &self.members {
            for b in &self.standard {
                values.push(point.coefficient(a, b));
            }
        }
        Ok(values)
    }
}

impl ChartMatrix {
    pub fn param_ring(&self) -> &PolyRing {
        &self.param_ring
    }

    pub fn base_ring(&self) -> &PolyRing {
        &self.base_ring
    }

    /// Row labels `(variable index, member monomial)`.
    pub fn rows(&self) -> &[(usize, Monomial)] {
        &self.rows
    }

    pub fn cols(&self) -> &[Monomial] {
        &self.cols
    }

    pub fn entries(&self) -> &[Vec<MultiPoly>] {
        &self.entries
    }

    pub fn row_label(&self, r: usize) -> String {
        let (j, a) = &self.rows[r];
        format!(
            "{}*f[{}]",
            self.base_ring.var_name(*j),
            a.render(&self.base_ring)
        )
    }

    pub fn col_label(&self, c: usize) -> String {
        self.cols[c].render(&self.base_ring)
    }

    /// Numeric matrix at given parameter values.
    pub fn evaluate(&self, values: &[Rat]) -> Result<QMatrix> {
        let mut m = QMatrix::zeros(self.rows.len(), self.cols.len());
        for (r, row) in self.entries.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                m.set(r, c, e.evaluate(values)?);
            }
        }
        Ok(m)
    }
}

/// The degree-`(m+1)` coefficient matrix of the chart around `[J_m]`.
pub fn build_chart_matrix(base: &MonomialIdeal) -> Result<ChartMatrix> {
    let chart = SymbolicChart::new(base)?;
    Ok(chart_matrix_of(&chart))
}

/// Matrix form of an already-built symbolic chart.
pub fn chart_matrix_of(chart: &SymbolicChart) -> ChartMatrix {
    let base_ring = chart.base().ring().clone();
    let param_ring = chart.param_ring().clone();
    let nv = base_ring.nvars();
    let cols = monomials_of_degree(nv, chart.degree() + 1, &TermOrder::Lex);
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for (i, a) in chart.members().iter().enumerate() {
        for j in 0..nv {
            let mut row = Vec::with_capacity(cols.len());
            for col in &cols {
                let entry = match col.div_var(j) {
                    None => MultiPoly::zero(&param_ring),
                    Some(w) => {
                        if &w == a {
                            MultiPoly::one(&param_ring)
                        } else if let Some(bj) =
                            chart.standard().iter().position(|b| *b == w)
                        {
                            MultiPoly::var(&param_ring, i * chart.standard().len() + bj)
                        } else {
                            MultiPoly::zero(&param_ring)
                        }
                    }
                };
                row.push(entry);
            }
            rows.push((j, a.clone()));
            entries.push(row);
        }
    }
    ChartMatrix {
        param_ring,
        base_ring,
        rows,
        cols,
        entries,
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        // advance to the next k-subset in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// All structurally nonzero `k x k` minors of the chart matrix, ordered by
/// (row set, column set) lexicographically, together with the census. A
/// selection whose rows include one vanishing entirely on the selected
/// columns is skipped without expansion; every other selection is expanded
/// symbolically and kept only if the determinant is nonzero.
pub fn minors_with_census(
    matrix: &ChartMatrix,
    k: usize,
) -> Result<(Vec<MultiPoly>, MinorCensus)> {
    let nrows = matrix.rows.len();
    let ncols = matrix.cols.len();
    if k == 0 || k > nrows.min(ncols) {
        return Err(Error::OutOfRange(format!(
            "minor size {k} out of range for a {nrows}x{ncols} matrix"
        )));
    }
    let row_sets = combinations(nrows, k);
    let col_sets = combinations(ncols, k);
    let selections: Vec<(&Vec<usize>, &Vec<usize>)> = row_sets
        .iter()
        .flat_map(|rs| col_sets.iter().map(move |cs| (rs, cs)))
        .collect();
    let candidates = selections.len();
    let minors: Vec<Option<MultiPoly>> = selections
        .par_iter()
        .map(|(rs, cs)| {
            let structurally_empty = rs.iter().any(|&r| {
                cs.iter().all(|&c| matrix.entries[r][c].is_zero())
            });
            if structurally_empty {
                return Ok(None);
            }
            let sub: Vec<Vec<MultiPoly>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| matrix.entries[r][c].clone()).collect())
                .collect();
            let d = det_poly(&sub)?;
            Ok((!d.is_zero()).then_some(d))
        })
        .collect::<Result<_>>()?;
    let nonzero: Vec<MultiPoly> = minors.into_iter().flatten().collect();
    let census = MinorCensus {
        size: k,
        candidates,
        nonzero: nonzero.len(),
    };
    Ok((nonzero, census))
}

/// The nonzero `k x k` minors alone.
pub fn minors_ideal(matrix: &ChartMatrix, k: usize) -> Result<Vec<MultiPoly>> {
    Ok(minors_with_census(matrix, k)?.0)
}

/// Critical minor size for the Hilbert-scheme application:
/// `dim J_{m+1} + 1`.
pub fn critical_minor_size(base: &MonomialIdeal) -> Result<usize> {
    let origin = ChartPoint::origin(base)?;
    Ok(origin.base().hilbert_function(origin.degree() + 1) + 1)
}

/// Trimmed defining equations of the chart: the minors of the critical size,
/// pruned to an irredundant generating set. Vacuous rank conditions (no
/// standard monomials, or too few rows for any critical minor) give the
/// empty list.
pub fn hilbert_chart_equations(base: &MonomialIdeal) -> Result<Vec<MultiPoly>> {
    let origin = ChartPoint::origin(base)?;
    if origin.standard().is_empty() {
        return Ok(Vec::new());
    }
    let matrix = build_chart_matrix(base)?;
    let k = origin.base().hilbert_function(origin.degree() + 1) + 1;
    if k > matrix.rows().len().min(matrix.cols().len()) {
        return Ok(Vec::new());
    }
    let minors = minors_ideal(&matrix, k)?;
    trim_generators(&minors, &TermOrder::DegRevLex)
}

/// Krull dimension of the chart cut out by `equations` inside the parameter
/// ring. The unit ideal (empty chart) is an error.
pub fn chart_dimension(param_ring: &PolyRing, equations: &[MultiPoly]) -> Result<usize> {
    if equations.is_empty() {
        return Ok(param_ring.nvars());
    }
    let gb = buchberger(equations, &TermOrder::DegRevLex)?;
    gb.krull_dimension()
}

/// The full worked-example pipeline: matrix, minor census, trimmed
/// equations, their reduced Groebner basis, and the chart dimension.
pub fn chart_equations_report(base: &MonomialIdeal) -> Result<ChartReport> {
    let matrix = build_chart_matrix(base)?;
    let k = critical_minor_size(base)?;
    if k > matrix.rows().len().min(matrix.cols().len()) {
        let param_ring = matrix.param_ring().clone();
        return Ok(ChartReport {
            census: MinorCensus {
                size: k,
                candidates: 0,
                nonzero: 0,
            },
            trimmed: Vec::new(),
            groebner: GroebnerBasis::empty(&param_ring, &TermOrder::DegRevLex),
            dimension: param_ring.nvars(),
            matrix,
        });
    }
    let (minors, census) = minors_with_census(&matrix, k)?;
    let trimmed = trim_generators(&minors, &TermOrder::DegRevLex)?;
    let groebner = if trimmed.is_empty() {
        GroebnerBasis::empty(matrix.param_ring(), &TermOrder::DegRevLex)
    } else {
        buchberger(&trimmed, &TermOrder::DegRevLex)?
    };
    let dimension = if groebner.is_zero_ideal() {
        matrix.param_ring().nvars()
    } else {
        groebner.krull_dimension()?
    };
    Ok(ChartReport {
        matrix,
        census,
        trimmed,
        groebner,
        dimension,
    })
}

fn embedding_of(ideal: &MonomialIdeal) -> Result<GrassmannianEmbedding> {
    let m = ideal.max_gen_degree().ok_or(Error::ZeroIdeal)?;
    let r = ideal.hilbert_function(m);
    let ambient = count_monomials(ideal.nvars(), m);
    Ok(GrassmannianEmbedding {
        regularity: m,
        subspace_dim: r,
        ambient_dim: ambient,
        chart_dim: r * (ambient - r),
    })
}

/// Compares the ambient Grassmannians of the extremal chart and of the lex
/// embedding at the lex ideal's regularity. Both ideals must share one
/// Hilbert polynomial.
pub fn grassmannian_sizes(
    base: &MonomialIdeal,
    lex_alternative: &MonomialIdeal,
) -> Result<GrassmannianReport> {
    let hp_base = base.hilbert_polynomial()?;
    let hp_lex = lex_alternative.hilbert_polynomial()?;
    if hp_base != hp_lex {
        return Err(Error::HilbertMismatch(
            hp_base.to_string(),
            hp_lex.to_string(),
        ));
    }
    Ok(GrassmannianReport {
        base: embedding_of(base)?,
        lex: embedding_of(lex_alternative)?,
    })
}
