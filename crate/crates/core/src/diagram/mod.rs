//! Planar and spherical combinatorial maps.
//!
//! A diagram is a set of darts (directed half-edges). Each dart knows its
//! vertex, its label, the opposite dart of the same edge (`opp`, a fixed-point
//! free involution) and the next dart counterclockwise around its vertex
//! (`next`, the rotation). Faces are derived as the orbits of the face
//! permutation `phi(d) = next[opp[d]]` and are never stored authoritatively.
//!
//! Surgeries (folds, edge deletions, edge contractions) are performed by
//! editing the face permutation and recomputing the rotation and the vertex
//! partition from it, which keeps the representation consistent by
//! construction.

pub mod build;
pub mod io;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::graph::{Gen, LabeledGraph};
use crate::presentation::Presentation;
use crate::word::{Letter, Word};
use crate::{Error, Result};

pub type DartId = usize;
pub type VertexId = usize;
/// Faces are identified by their smallest alive dart.
pub type FaceId = usize;

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum DiagramKind {
    Planar,
    Spherical,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum FaceTag {
    Inner,
    Outer,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dart {
    pub vertex: VertexId,
    pub label: Letter,
    pub opp: DartId,
    pub next: DartId,
    pub tag: FaceTag,
}

#[derive(Clone, Debug)]
pub struct Diagram {
    pub(crate) darts: Vec<Dart>,
    pub(crate) alive: Vec<bool>,
    pub(crate) kind: DiagramKind,
    pub(crate) vertex_count: usize,
    /// Howie corner words: the corner of a face after traversing a dart.
    pub(crate) corners: BTreeMap<DartId, Word>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    OppNotInvolution { dart: DartId },
    LabelNotInverse { dart: DartId },
    NextNotPermutation { dart: DartId },
    Disconnected,
    EulerCharacteristic { v: usize, e: usize, f: usize },
    OuterFaceCount { count: usize },
    SphericalHasBoundary,
    FaceNotRelator { face: FaceId, word: String },
    MixedFaceTags { face: FaceId },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Inner vertices of valency 2, flagged but not structural errors.
    pub a1_flags: Vec<VertexId>,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub area: usize,
    pub boundary: Option<String>,
    /// Per inner face: matched (relator index, inverted) if a presentation
    /// was supplied.
    pub face_matches: Vec<(FaceId, Option<(usize, bool)>)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RegionClassification {
    pub reg2: Vec<FaceId>,
    pub reg4plus: Vec<FaceId>,
    pub t_set: BTreeSet<Gen>,
    pub face_relators: BTreeMap<FaceId, (usize, bool)>,
}

impl Diagram {
    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn dart_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn edge_count(&self) -> usize {
        self.dart_count() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_alive(&self, d: DartId) -> bool {
        d < self.alive.len() && self.alive[d]
    }

    pub fn dart(&self, d: DartId) -> &Dart {
        debug_assert!(self.alive[d]);
        &self.darts[d]
    }

    pub fn opp(&self, d: DartId) -> DartId {
        self.darts[d].opp
    }

    pub fn next(&self, d: DartId) -> DartId {
        self.darts[d].next
    }

    pub fn label(&self, d: DartId) -> Letter {
        self.darts[d].label
    }

    pub fn vertex(&self, d: DartId) -> VertexId {
        self.darts[d].vertex
    }

    pub fn tag(&self, d: DartId) -> FaceTag {
        self.darts[d].tag
    }

    pub fn corner_after(&self, d: DartId) -> Option<&Word> {
        self.corners.get(&d)
    }

    pub fn set_corner(&mut self, d: DartId, w: Word) {
        self.corners.insert(d, w);
    }

    pub fn alive_darts(&self) -> impl Iterator<Item = DartId> + '_ {
        (0..self.darts.len()).filter(|&d| self.alive[d])
    }

    /// Face permutation `phi(d) = next[opp[d]]`.
    pub fn face_next(&self, d: DartId) -> DartId {
        self.darts[self.darts[d].opp].next
    }

    pub fn face_prev(&self, d: DartId) -> DartId {
        // phi^{-1}(d): walk the face orbit
        let mut p = d;
        loop {
            let n = self.face_next(p);
            if n == d {
                return p;
            }
            p = n;
        }
    }

    /// All faces as dart orbits, each starting at its minimal dart, ordered
    /// by that minimal dart.
    pub fn faces(&self) -> Vec<Vec<DartId>> {
        let mut seen = vec![false; self.darts.len()];
        let mut out = Vec::new();
        for d in self.alive_darts() {
            if seen[d] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = d;
            loop {
                seen[x] = true;
                orbit.push(x);
                x = self.face_next(x);
                if x == d {
                    break;
                }
            }
            out.push(orbit);
        }
        out
    }

    pub fn face_of(&self, d: DartId) -> Vec<DartId> {
        let mut orbit = Vec::new();
        let mut x = d;
        loop {
            orbit.push(x);
            x = self.face_next(x);
            if x == d {
                break;
            }
        }
        // normalize to start at the minimal dart
        let min_pos = orbit
            .iter()
            .enumerate()
            .min_by_key(|(_, &x)| x)
            .map(|(i, _)| i)
            .unwrap();
        orbit.rotate_left(min_pos);
        orbit
    }

    pub fn face_id(&self, d: DartId) -> FaceId {
        *self.face_of(d).first().unwrap()
    }

    pub fn inner_faces(&self) -> Vec<Vec<DartId>> {
        self.faces()
            .into_iter()
            .filter(|f| self.darts[f[0]].tag == FaceTag::Inner)
            .collect()
    }

    pub fn outer_faces(&self) -> Vec<Vec<DartId>> {
        self.faces()
            .into_iter()
            .filter(|f| self.darts[f[0]].tag == FaceTag::Outer)
            .collect()
    }

    /// The word spelled by a face orbit.
    pub fn face_word(&self, face: &[DartId]) -> Word {
        Word(face.iter().map(|&d| self.darts[d].label).collect())
    }

    /// Number of inner faces (all faces for spherical diagrams).
    pub fn area(&self) -> usize {
        match self.kind {
            DiagramKind::Planar => self.inner_faces().len(),
            DiagramKind::Spherical => self.faces().len(),
        }
    }

    pub fn vertices(&self) -> Vec<Vec<DartId>> {
        let mut map: BTreeMap<VertexId, Vec<DartId>> = BTreeMap::new();
        for d in self.alive_darts() {
            map.entry(self.darts[d].vertex).or_default().push(d);
        }
        map.into_values().collect()
    }

    pub fn valency(&self, v: VertexId) -> usize {
        self.alive_darts().filter(|&d| self.darts[d].vertex == v).count()
    }

    pub fn is_boundary_vertex(&self, v: VertexId) -> bool {
        self.alive_darts()
            .any(|d| self.darts[d].vertex == v && self.darts[d].tag == FaceTag::Outer)
    }

    /// Boundary word read clockwise from a basepoint dart on the outer face.
    pub fn boundary_word(&self, basepoint: DartId) -> Result<Word> {
        if self.kind != DiagramKind::Planar {
            return Err(Error::Diagram("spherical diagrams have no boundary".into()));
        }
        if !self.is_alive(basepoint) || self.darts[basepoint].tag != FaceTag::Outer {
            return Err(Error::Diagram("basepoint not on the outer face".into()));
        }
        let orbit = self.face_of(basepoint);
        let start = orbit.iter().position(|&d| d == basepoint).unwrap();
        let n = orbit.len();
        // reversed traversal starting at the basepoint, reading opposite labels
        let mut letters = Vec::with_capacity(n);
        for i in 0..n {
            let d = orbit[(start + n - i) % n];
            let d = if i == 0 { orbit[start] } else { d };
            letters.push(self.darts[self.darts[d].opp].label);
        }
        Ok(Word(letters))
    }

    /// Boundary word from the minimal outer dart.
    pub fn boundary(&self) -> Result<Word> {
        let outer = self
            .outer_faces()
            .into_iter()
            .next()
            .ok_or_else(|| Error::Diagram("no outer face".into()))?;
        self.boundary_word(outer[0])
    }

    /// Distinct neighbouring inner regions of an inner face, and the boundary
    /// arcs (maximal runs of consecutive edges shared with one face).
    pub fn region_neighbours(&self, face: &[DartId]) -> (BTreeSet<FaceId>, usize) {
        let mut ids: Vec<Option<FaceId>> = Vec::with_capacity(face.len());
        for &d in face {
            let o = self.darts[d].opp;
            if self.darts[o].tag == FaceTag::Inner {
                ids.push(Some(self.face_id(o)));
            } else {
                ids.push(None);
            }
        }
        let own = self.face_id(face[0]);
        let neighbours: BTreeSet<FaceId> = ids
            .iter()
            .flatten()
            .copied()
            .filter(|&f| f != own)
            .collect();
        // count maximal arcs of equal neighbour (cyclically)
        let n = ids.len();
        let mut arcs = 0;
        for i in 0..n {
            let prev = &ids[(i + n - 1) % n];
            if ids[i].is_some() && ids[i] != *prev {
                arcs += 1;
            }
        }
        if arcs == 0 && ids.iter().any(|x| x.is_some()) {
            arcs = 1; // single neighbour all the way round
        }
        (neighbours, arcs)
    }

    /// Classification of inner regions by the relator they realise.
    pub fn classify_regions(&self, p: &Presentation) -> Result<RegionClassification> {
        let mut reg2 = Vec::new();
        let mut reg4plus = Vec::new();
        let mut t_set = BTreeSet::new();
        let mut face_relators = BTreeMap::new();
        let faces = match self.kind {
            DiagramKind::Planar => self.inner_faces(),
            DiagramKind::Spherical => self.faces(),
        };
        for f in faces {
            let id = f[0];
            let w = self.face_word(&f);
            let (idx, inv) = p.match_relator(&w).ok_or_else(|| {
                Error::Diagram(format!("face {id} does not realise a relator"))
            })?;
            face_relators.insert(id, (idx, inv));
            let rel = &p.relators[idx];
            if rel.label == 2 {
                reg2.push(id);
            } else {
                reg4plus.push(id);
                t_set.extend(w.support());
            }
        }
        Ok(RegionClassification {
            reg2,
            reg4plus,
            t_set,
            face_relators,
        })
    }

    /// Every inner vertex has valency >= 4 and every inner region (no
    /// boundary vertex) meets >= 4 boundary arcs.
    pub fn diagram_c4t4(&self) -> bool {
        for v in self.vertex_ids() {
            if !self.is_boundary_vertex(v) && self.valency(v) < 4 {
                return false;
            }
        }
        let faces = match self.kind {
            DiagramKind::Planar => self.inner_faces(),
            DiagramKind::Spherical => self.faces(),
        };
        for f in &faces {
            let inner_region = f
                .iter()
                .all(|&d| !self.is_boundary_vertex(self.darts[d].vertex));
            if inner_region {
                let (_, arcs) = self.region_neighbours(f);
                if arcs < 4 {
                    return false;
                }
            }
        }
        true
    }

    pub fn vertex_ids(&self) -> BTreeSet<VertexId> {
        self.alive_darts().map(|d| self.darts[d].vertex).collect()
    }

    /// False iff some pair of adjacent inner faces is a cancelling (mirror)
    /// pair across a common edge, with matching corner words where present.
    pub fn is_reduced(&self) -> bool {
        self.find_cancelling_pair().is_none()
    }

    /// Finds a dart whose edge carries a cancelling face pair.
    pub fn find_cancelling_pair(&self) -> Option<DartId> {
        for d in self.alive_darts() {
            let o = self.darts[d].opp;
            if d > o {
                continue;
            }
            if self.darts[d].tag != FaceTag::Inner || self.darts[o].tag != FaceTag::Inner {
                continue;
            }
            let f1 = self.face_of(d);
            let f2 = self.face_of(o);
            if f1[0] == f2[0] {
                continue; // edge interior to a single face
            }
            if self.mirror_pair(&f1, d, &f2, o) {
                return Some(d);
            }
        }
        None
    }

    fn mirror_pair(&self, f1: &[DartId], d: DartId, f2: &[DartId], o: DartId) -> bool {
        let n = f1.len();
        if f2.len() != n {
            return false;
        }
        let s1 = f1.iter().position(|&x| x == d).unwrap();
        let s2 = f2.iter().position(|&x| x == o).unwrap();
        for j in 0..n {
            let a = self.darts[f1[(s1 + (n - j) % n) % n]].label;
            let b = self.darts[f2[(s2 + j) % n]].label;
            if b != a.inverse() {
                return false;
            }
        }
        // corner data at the shared edge's endpoints must match
        let empty = Word::empty();
        let c = |x: DartId| self.corners.get(&x).unwrap_or(&empty);
        let d_prev = f1[(s1 + n - 1) % n];
        let o_prev = f2[(s2 + n - 1) % n];
        c(d) == c(o_prev) && c(d_prev) == c(o)
    }

    /// Structural and labelling checks; never panics on malformed input.
    pub fn validate(&self, p: Option<&Presentation>) -> ValidationReport {
        let mut violations = Vec::new();
        for d in self.alive_darts() {
            let o = self.darts[d].opp;
            if !self.is_alive(o) || self.darts[o].opp != d || o == d {
                violations.push(Violation::OppNotInvolution { dart: d });
                continue;
            }
            if self.darts[o].label != self.darts[d].label.inverse() {
                violations.push(Violation::LabelNotInverse { dart: d });
            }
        }
        // next must be a permutation preserving vertices
        let mut indeg: BTreeMap<DartId, usize> = BTreeMap::new();
        for d in self.alive_darts() {
            let n = self.darts[d].next;
            if !self.is_alive(n) || self.darts[n].vertex != self.darts[d].vertex {
                violations.push(Violation::NextNotPermutation { dart: d });
            } else {
                *indeg.entry(n).or_insert(0) += 1;
            }
        }
        for d in self.alive_darts() {
            if indeg.get(&d).copied().unwrap_or(0) != 1 {
                violations.push(Violation::NextNotPermutation { dart: d });
            }
        }
        if !violations.is_empty() {
            return ValidationReport {
                violations,
                a1_flags: Vec::new(),
                vertices: 0,
                edges: 0,
                faces: 0,
                area: 0,
                boundary: None,
                face_matches: Vec::new(),
            };
        }

        // connectivity over opp and next
        let mut seen: BTreeSet<DartId> = BTreeSet::new();
        if let Some(start) = self.alive_darts().next() {
            let mut queue = VecDeque::from([start]);
            while let Some(d) = queue.pop_front() {
                if !seen.insert(d) {
                    continue;
                }
                queue.push_back(self.darts[d].opp);
                queue.push_back(self.darts[d].next);
            }
        }
        if seen.len() != self.dart_count() {
            violations.push(Violation::Disconnected);
        }

        let v = self.vertex_ids().len();
        let e = self.edge_count();
        let faces = self.faces();
        let f = faces.len();
        if (v + f) as i64 - e as i64 != 2 {
            violations.push(Violation::EulerCharacteristic { v, e, f });
        }
        let outer: Vec<_> = faces
            .iter()
            .filter(|fc| self.darts[fc[0]].tag == FaceTag::Outer)
            .collect();
        match self.kind {
            DiagramKind::Planar => {
                if outer.len() != 1 {
                    violations.push(Violation::OuterFaceCount { count: outer.len() });
                }
            }
            DiagramKind::Spherical => {
                if !outer.is_empty() {
                    violations.push(Violation::SphericalHasBoundary);
                }
            }
        }
        for fc in &faces {
            let tag = self.darts[fc[0]].tag;
            if fc.iter().any(|&d| self.darts[d].tag != tag) {
                violations.push(Violation::MixedFaceTags { face: fc[0] });
            }
        }

        let mut face_matches = Vec::new();
        if let Some(p) = p {
            for fc in &faces {
                if self.darts[fc[0]].tag != FaceTag::Inner && self.kind == DiagramKind::Planar {
                    continue;
                }
                if self.darts[fc[0]].tag == FaceTag::Outer {
                    continue;
                }
                let w = self.face_word(fc);
                let m = p.match_relator(&w);
                if m.is_none() {
                    violations.push(Violation::FaceNotRelator {
                        face: fc[0],
                        word: format!("{:?}", w),
                    });
                }
                face_matches.push((fc[0], m));
            }
        }

        let a1_flags = self
            .vertex_ids()
            .into_iter()
            .filter(|&vx| !self.is_boundary_vertex(vx) && self.valency(vx) == 2)
            .collect();

        let boundary = match self.kind {
            DiagramKind::Planar => self.boundary().ok().map(|w| format!("{w:?}")),
            DiagramKind::Spherical => None,
        };

        ValidationReport {
            violations,
            a1_flags,
            vertices: v,
            edges: e,
            faces: f,
            area: self.area(),
            boundary,
            face_matches,
        }
    }

    // ----- surgeries ------------------------------------------------------

    /// Raw face permutation table over all dart slots (dead slots map to
    /// themselves).
    fn phi_table(&self) -> Vec<DartId> {
        (0..self.darts.len())
            .map(|d| {
                if self.alive[d] {
                    self.face_next(d)
                } else {
                    d
                }
            })
            .collect()
    }

    /// Rebuilds `next`, the vertex partition and the vertex count from a face
    /// permutation over the currently alive darts.
    fn rebuild_from_phi(&mut self, phi: &[DartId]) {
        for d in 0..self.darts.len() {
            if self.alive[d] {
                let o = self.darts[d].opp;
                self.darts[d].next = phi[o];
            }
        }
        // vertices = orbits of next
        let mut vertex = vec![usize::MAX; self.darts.len()];
        let mut count = 0;
        for d in 0..self.darts.len() {
            if !self.alive[d] || vertex[d] != usize::MAX {
                continue;
            }
            let id = count;
            count += 1;
            let mut x = d;
            loop {
                vertex[x] = id;
                x = self.darts[x].next;
                if x == d {
                    break;
                }
            }
        }
        for d in 0..self.darts.len() {
            if self.alive[d] {
                self.darts[d].vertex = vertex[d];
            }
        }
        self.vertex_count = count;
    }

    fn kill(&mut self, d: DartId) {
        self.alive[d] = false;
        self.corners.remove(&d);
    }

    /// Compose out dead darts from a phi table.
    fn phi_skip(&self, phi: &[DartId], mut d: DartId) -> DartId {
        loop {
            d = phi[d];
            if self.alive[d] {
                return d;
            }
        }
    }

    fn finish_surgery(&mut self, phi: &[DartId]) {
        let skipped: Vec<DartId> = (0..self.darts.len())
            .map(|d| if self.alive[d] { self.phi_skip(phi, d) } else { d })
            .collect();
        self.rebuild_from_phi(&skipped);
    }

    /// Folds the consecutive boundary-of-face pair `(b, phi(b))` whose labels
    /// cancel, identifying the two edges (a diamond fold). Works within any
    /// face. Errors if the configuration is not foldable.
    pub fn fold(&mut self, b1: DartId) -> Result<()> {
        if !self.is_alive(b1) {
            return Err(Error::NotApplicable("dead dart".into()));
        }
        let phi = self.phi_table();
        let b2 = phi[b1];
        if b2 == b1 {
            return Err(Error::NotApplicable("monogon face".into()));
        }
        if self.darts[b2].label != self.darts[b1].label.inverse() {
            return Err(Error::NotApplicable("labels do not cancel".into()));
        }
        if self.darts[b2].opp == b1 {
            // spur: remove the dangling edge entirely
            self.kill(b1);
            self.kill(b2);
            self.finish_surgery(&phi);
            return Ok(());
        }
        let i1 = self.darts[b1].opp;
        let i2 = self.darts[b2].opp;
        self.darts[i1].opp = i2;
        self.darts[i2].opp = i1;
        self.kill(b1);
        self.kill(b2);
        self.finish_surgery(&phi);
        Ok(())
    }

    /// Deletes an edge separating two distinct faces, merging them. The
    /// surviving darts keep their tags; the caller reconciles tags if the
    /// merged faces were tagged differently.
    pub fn delete_edge(&mut self, d: DartId) -> Result<()> {
        if !self.is_alive(d) {
            return Err(Error::NotApplicable("dead dart".into()));
        }
        let o = self.darts[d].opp;
        let f1 = self.face_of(d);
        if f1.contains(&o) {
            return Err(Error::NotApplicable(
                "edge has the same face on both sides".into(),
            ));
        }
        let mut phi = self.phi_table();
        let pd = self.face_prev(d);
        let po = self.face_prev(o);
        phi[pd] = phi[o];
        phi[po] = phi[d];
        // make the dead slots transparent for phi_skip
        phi[d] = d;
        phi[o] = o;
        self.kill(d);
        self.kill(o);
        self.finish_surgery(&phi);
        Ok(())
    }

    /// Contracts a non-loop edge, merging its endpoints.
    pub fn contract_edge(&mut self, d: DartId) -> Result<()> {
        if !self.is_alive(d) {
            return Err(Error::NotApplicable("dead dart".into()));
        }
        let o = self.darts[d].opp;
        if self.darts[d].vertex == self.darts[o].vertex {
            return Err(Error::NotApplicable("cannot contract a loop".into()));
        }
        let phi = self.phi_table();
        self.kill(d);
        self.kill(o);
        self.finish_surgery(&phi);
        Ok(())
    }

    /// Drops dead slots; returns the mapping old dart id -> new dart id.
    pub fn compact(&mut self) -> Vec<Option<DartId>> {
        let mut map = vec![None; self.darts.len()];
        let mut new_darts = Vec::with_capacity(self.dart_count());
        for d in 0..self.darts.len() {
            if self.alive[d] {
                map[d] = Some(new_darts.len());
                new_darts.push(self.darts[d].clone());
            }
        }
        for dart in &mut new_darts {
            dart.opp = map[dart.opp].expect("opp alive");
            dart.next = map[dart.next].expect("next alive");
        }
        let corners = std::mem::take(&mut self.corners);
        self.corners = corners
            .into_iter()
            .filter_map(|(d, w)| map[d].map(|nd| (nd, w)))
            .collect();
        self.darts = new_darts;
        self.alive = vec![true; self.darts.len()];
        map
    }

    /// Canonical signature rooted at a dart: BFS relabelling over `(next,
    /// opp)` with labels.
    pub fn rooted_signature(&self, root: DartId) -> Vec<(usize, usize, Letter, FaceTag)> {
        let mut index: BTreeMap<DartId, usize> = BTreeMap::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::from([root]);
        while let Some(d) = queue.pop_front() {
            if index.contains_key(&d) {
                continue;
            }
            index.insert(d, order.len());
            order.push(d);
            queue.push_back(self.darts[d].next);
            queue.push_back(self.darts[d].opp);
        }
        order
            .iter()
            .map(|&d| {
                (
                    index[&self.darts[d].next],
                    index[&self.darts[d].opp],
                    self.darts[d].label,
                    self.darts[d].tag,
                )
            })
            .collect()
    }

    /// Isomorphism of maps; for planar diagrams roots range over outer darts
    /// (comparison up to boundary basepoint), for spherical over all darts.
    pub fn isomorphic(&self, other: &Diagram) -> bool {
        if self.kind != other.kind
            || self.dart_count() != other.dart_count()
            || self.vertex_count() != other.vertex_count()
        {
            return false;
        }
        let roots_self: Vec<DartId> = match self.kind {
            DiagramKind::Planar => self
                .alive_darts()
                .filter(|&d| self.darts[d].tag == FaceTag::Outer)
                .take(1)
                .collect(),
            DiagramKind::Spherical => self.alive_darts().take(1).collect(),
        };
        let roots_other: Vec<DartId> = match other.kind {
            DiagramKind::Planar => other
                .alive_darts()
                .filter(|&d| other.darts[d].tag == FaceTag::Outer)
                .collect(),
            DiagramKind::Spherical => other.alive_darts().collect(),
        };
        let Some(&r) = roots_self.first() else {
            return other.dart_count() == 0;
        };
        let sig = self.rooted_signature(r);
        roots_other
            .iter()
            .any(|&s| other.rooted_signature(s) == sig)
    }
}

/// Free-function wrappers mirroring the operation names.
pub fn area(d: &Diagram) -> usize {
    d.area()
}

pub fn diagram_c4t4(d: &Diagram) -> bool {
    d.diagram_c4t4()
}

pub fn is_reduced(d: &Diagram) -> bool {
    d.is_reduced()
}

pub fn validate(d: &Diagram, p: &Presentation) -> ValidationReport {
    d.validate(Some(p))
}

pub fn boundary_word(d: &Diagram, basepoint: DartId) -> Result<Word> {
    d.boundary_word(basepoint)
}

pub fn classify_regions(d: &Diagram, p: &Presentation) -> Result<RegionClassification> {
    d.classify_regions(p)
}

/// Letter display helper shared by io and dot export.
pub(crate) fn letter_token(graph: &LabeledGraph, l: Letter) -> String {
    match l.sign {
        crate::word::Sign::Plus => graph.name(l.gen).to_string(),
        crate::word::Sign::Minus => format!("{}^-1", graph.name(l.gen)),
    }
}
