//! Group presentations of link complements read off a mixed diagram: the
//! Wirtinger presentation of the link together with the surgery unknot in
//! the three-sphere, and the quotient presentation of the link complement in
//! the surgered manifold.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::{Crossing, DiagramError, DiskStrand, MixedDiagram, SurgeryChain};
use crate::freegroup::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    /// Meridian of a link component (carries the component index for
    /// multivariable gradings).
    Link { component: usize },
    /// Meridian of a surgery unknot.
    Surgery { layer: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenInfo {
    pub name: String,
    pub kind: GenKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelTag {
    /// Wirtinger relator of an internal crossing.
    Wirtinger(usize),
    /// Relator of the strand crossing where it runs over the surgery circle.
    UOver { layer: usize, strand: usize },
    /// Relator of the crossing where the surgery circle runs under a strand.
    UUnder { layer: usize, strand: usize },
    /// Surgery relator of a layer.
    Lens(usize),
    /// Slot generator identified with the canonical generator of its arc.
    Identification(usize),
}

impl fmt::Display for RelTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelTag::Wirtinger(i) => write!(f, "w{i}"),
            RelTag::UOver { layer, strand } => {
                if *layer == 0 {
                    write!(f, "q{}", strand + 1)
                } else {
                    write!(f, "q{}.{}", layer + 1, strand + 1)
                }
            }
            RelTag::UUnder { layer, strand } => {
                if *layer == 0 {
                    write!(f, "r{}", strand + 1)
                } else {
                    write!(f, "r{}.{}", layer + 1, strand + 1)
                }
            }
            RelTag::Lens(layer) => {
                if *layer == 0 {
                    write!(f, "lens")
                } else {
                    write!(f, "lens{}", layer + 1)
                }
            }
            RelTag::Identification(i) => write!(f, "id{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub gens: Vec<GenInfo>,
    pub relators: Vec<(RelTag, Word)>,
}

impl Presentation {
    pub fn gen_names(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.name.clone()).collect()
    }

    /// Abelianized relator matrix, one row per generator, one column per
    /// relator.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.gens.len();
        let mut m = vec![vec![0i64; self.relators.len()]; n];
        for (j, (_, w)) in self.relators.iter().enumerate() {
            for (row, cell) in m.iter_mut().enumerate() {
                cell[j] = w.exponent_sum(row as u16);
            }
        }
        m
    }

    pub fn to_display(&self) -> String {
        let names = self.gen_names();
        let mut out = String::from("gens:");
        for n in &names {
            out.push(' ');
            out.push_str(n);
        }
        out.push('\n');
        for (tag, w) in &self.relators {
            out.push_str(&alloc::format!("rel[{tag}]: {}\n", w.to_display(&names)));
        }
        out
    }
}

/// Generator bookkeeping while assembling a presentation.
struct GenTable {
    gens: Vec<GenInfo>,
    canonical: BTreeMap<String, u16>,
}

impl GenTable {
    fn new() -> Self {
        GenTable { gens: Vec::new(), canonical: BTreeMap::new() }
    }

    fn push(&mut self, name: String, kind: GenKind, arc: Option<&str>) -> u16 {
        let id = self.gens.len() as u16;
        self.gens.push(GenInfo { name, kind });
        if let Some(a) = arc {
            self.canonical.entry(a.to_string()).or_insert(id);
        }
        id
    }

    fn of_arc(&self, arc: &str) -> u16 {
        self.canonical[arc]
    }
}

struct Layout {
    table: GenTable,
    /// per layer: (slot gen ids above, slot gen ids below, a-gen ids, eps)
    layers: Vec<LayerSlots>,
    identifications: Vec<(u16, u16)>,
}

struct LayerSlots {
    above: Vec<u16>,
    below: Vec<u16>,
    a: Vec<u16>,
    eps: Vec<i8>,
}

fn layer_prefix(layer: usize, n_layers: usize, base: char) -> String {
    if n_layers <= 1 {
        base.to_string()
    } else {
        alloc::format!("{base}{}_", layer + 1)
    }
}

/// Lay out generators: per layer the slot generators x_1..x_{2k} (above
/// strands first, then below), then one generator per remaining arc, then
/// per layer the surgery meridians a_1..a_k (at least one).
fn layout(
    components: &[Vec<String>],
    layers: &[(Vec<&DiskStrand>, ())],
    comp_of: &dyn Fn(&str) -> usize,
) -> Layout {
    let n_layers = layers.len();
    let mut table = GenTable::new();
    let mut out_layers = Vec::new();
    let mut identifications = Vec::new();
    for (li, (strands, ())) in layers.iter().enumerate() {
        let k = strands.len();
        let xp = layer_prefix(li, n_layers, 'x');
        let mut above = Vec::new();
        let mut below = Vec::new();
        for (i, s) in strands.iter().enumerate() {
            let id = table.push(
                alloc::format!("{xp}{}", i + 1),
                GenKind::Link { component: comp_of(&s.above) },
                Some(&s.above),
            );
            above.push(id);
            if table.of_arc(&s.above) != id {
                identifications.push((id, table.of_arc(&s.above)));
            }
        }
        for (i, s) in strands.iter().enumerate() {
            let id = table.push(
                alloc::format!("{xp}{}", k + i + 1),
                GenKind::Link { component: comp_of(&s.below) },
                Some(&s.below),
            );
            below.push(id);
            if table.of_arc(&s.below) != id {
                identifications.push((id, table.of_arc(&s.below)));
            }
        }
        out_layers.push(LayerSlots {
            above,
            below,
            a: Vec::new(),
            eps: strands.iter().map(|s| s.eps).collect(),
        });
    }
    for (ci, comp) in components.iter().enumerate() {
        for arc in comp {
            if !table.canonical.contains_key(arc.as_str()) {
                table.push(arc.clone(), GenKind::Link { component: ci }, Some(arc));
            }
        }
    }
    for (li, slots) in out_layers.iter_mut().enumerate() {
        let ap = layer_prefix(li, n_layers, 'a');
        let n_a = slots.eps.len().max(1);
        for j in 0..n_a {
            let id = table.push(
                alloc::format!("{ap}{}", j + 1),
                GenKind::Surgery { layer: li },
                None,
            );
            slots.a.push(id);
        }
    }
    Layout { table, layers: out_layers, identifications }
}

fn wirtinger_word(table: &GenTable, c: &Crossing) -> Word {
    let o = table.of_arc(&c.over);
    let ui = table.of_arc(&c.under_in);
    let uo = table.of_arc(&c.under_out);
    let s = c.sign as i8;
    Word::from_letters(&[(uo, 1), (o, s), (ui, -1), (o, -s)])
}

fn strand_relators(slots: &LayerSlots, layer: usize, out: &mut Vec<(RelTag, Word)>) {
    let k = slots.eps.len();
    let a1 = slots.a[0];
    for i in 0..k {
        let e = slots.eps[i];
        // a1 x_{k+i}^e a1^{-1} x_i^{-e}
        let w = Word::gen(a1)
            .mul(&Word::gen(slots.below[i]).pow(e as i64))
            .mul(&Word::gen_inv(a1))
            .mul(&Word::gen(slots.above[i]).pow(-(e as i64)));
        out.push((RelTag::UOver { layer, strand: i }, w));
    }
    for i in 0..k {
        let e = slots.eps[i] as i64;
        let xi = Word::gen(slots.above[i]);
        let first = slots.a[k - i - 1];
        let second = slots.a[(k - i) % k];
        let w = xi
            .pow(e)
            .mul(&Word::gen(first))
            .mul(&xi.pow(-e))
            .mul(&Word::gen_inv(second));
        out.push((RelTag::UUnder { layer, strand: i }, w));
    }
}

fn lens_relator(slots: &LayerSlots, p: i64, q: i64) -> Word {
    let mut braid = Word::identity();
    for (i, &e) in slots.eps.iter().enumerate() {
        braid = braid.mul(&Word::gen(slots.above[i]).pow(e as i64));
    }
    Word::gen(slots.a[0]).pow(p).mul(&braid.pow(-q))
}

fn assemble(
    components: &[Vec<String>],
    crossings: &[Crossing],
    strand_layers: &[Vec<&DiskStrand>],
    surgeries: Option<&[(i64, i64)]>,
    comp_of: &dyn Fn(&str) -> usize,
) -> Presentation {
    let layer_spec: Vec<(Vec<&DiskStrand>, ())> =
        strand_layers.iter().map(|v| (v.clone(), ())).collect();
    let lay = layout(components, &layer_spec, comp_of);
    let mut relators = Vec::new();
    for (i, c) in crossings.iter().enumerate() {
        relators.push((RelTag::Wirtinger(i), wirtinger_word(&lay.table, c)));
    }
    for (li, slots) in lay.layers.iter().enumerate() {
        strand_relators(slots, li, &mut relators);
    }
    if let Some(pq) = surgeries {
        for (li, slots) in lay.layers.iter().enumerate() {
            let (p, q) = pq[li];
            relators.push((RelTag::Lens(li), lens_relator(slots, p, q)));
        }
    }
    for (i, &(slot, canon)) in lay.identifications.iter().enumerate() {
        relators.push((
            RelTag::Identification(i),
            Word::gen(slot).mul(&Word::gen_inv(canon)),
        ));
    }
    Presentation { gens: lay.table.gens, relators }
}

/// Wirtinger presentation of the complement of L together with the surgery
/// circle(s) in the three-sphere (no surgery relator).
pub fn wirtinger_s3(d: &MixedDiagram) -> Result<Presentation, DiagramError> {
    d.validate().map_err(DiagramError::Invalid)?;
    let strands: Vec<&DiskStrand> = d.disk_strands.iter().collect();
    let comp = |a: &str| d.component_of(a).expect("validated arc");
    Ok(assemble(&d.components, &d.crossings, &[strands], None, &comp))
}

/// Presentation of the complement of L in the surgered manifold: the
/// three-sphere presentation plus the surgery relator.
pub fn lens_presentation(d: &MixedDiagram) -> Result<Presentation, DiagramError> {
    d.validate().map_err(DiagramError::Invalid)?;
    let strands: Vec<&DiskStrand> = d.disk_strands.iter().collect();
    let comp = |a: &str| d.component_of(a).expect("validated arc");
    Ok(assemble(
        &d.components,
        &d.crossings,
        &[strands],
        Some(&[(d.p, d.q)]),
        &comp,
    ))
}

/// Presentation of the complement of L in the manifold obtained by surgery
/// on every layer of the chain.
pub fn chain_presentation(c: &SurgeryChain) -> Result<Presentation, DiagramError> {
    c.validate().map_err(DiagramError::Invalid)?;
    let strand_layers: Vec<Vec<&DiskStrand>> = c
        .layers
        .iter()
        .map(|l| l.disk_strands.iter().collect())
        .collect();
    let pq: Vec<(i64, i64)> = c.layers.iter().map(|l| (l.p, l.q)).collect();
    let comp = |a: &str| c.component_of(a).expect("validated arc");
    Ok(assemble(&c.components, &c.crossings, &strand_layers, Some(&pq), &comp))
}

/// Wirtinger presentation of the underlying link alone in the three-sphere:
/// the surgery circle is discarded and arcs split only by the disk are
/// merged back together.
pub fn link_only_presentation(d: &MixedDiagram) -> Result<Presentation, DiagramError> {
    d.validate().map_err(DiagramError::Invalid)?;
    // Union-find over arcs: each disk strand merges its below and above arc.
    let mut all_arcs: Vec<&str> = Vec::new();
    let mut index: BTreeMap<&str, usize> = BTreeMap::new();
    for comp in &d.components {
        for a in comp {
            index.insert(a.as_str(), all_arcs.len());
            all_arcs.push(a.as_str());
        }
    }
    let mut parent: Vec<usize> = (0..all_arcs.len()).collect();
    fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for s in &d.disk_strands {
        let a = find(&mut parent, index[s.above.as_str()]);
        let b = find(&mut parent, index[s.below.as_str()]);
        // Keep the smaller index (earlier arc) as representative.
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        parent[hi] = lo;
    }
    let mut table = GenTable::new();
    let mut class_gen: BTreeMap<usize, u16> = BTreeMap::new();
    for comp in &d.components {
        for arc in comp {
            let root = find(&mut parent, index[arc.as_str()]);
            let id = match class_gen.get(&root) {
                Some(&id) => id,
                None => {
                    let ci = d.component_of(all_arcs[root]).expect("validated");
                    let id = table.push(
                        all_arcs[root].to_string(),
                        GenKind::Link { component: ci },
                        Some(all_arcs[root]),
                    );
                    class_gen.insert(root, id);
                    id
                }
            };
            table.canonical.entry(arc.clone()).or_insert(id);
        }
    }
    let relators = d
        .crossings
        .iter()
        .enumerate()
        .map(|(i, c)| (RelTag::Wirtinger(i), wirtinger_word(&table, c)))
        .collect();
    Ok(Presentation { gens: table.gens, relators })
}
