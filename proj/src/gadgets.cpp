#include "ppsat/gadgets.hpp"

#include <algorithm>
#include <set>

#include "ppsat/connectivity.hpp"
#include "ppsat/errors.hpp"
#include "ppsat/planarity.hpp"

namespace ppsat {

namespace {

/// Accumulates a positive 1-in-3 instance from gadget pieces.
struct InstanceBuilder {
  SatInstance inst;

  InstanceBuilder() { inst.variant = Variant::OneInThree; }

  int new_var() { return inst.nvars++; }

  int add_clause(int a, int b, int c) {
    std::vector<int> cl{a + 1, b + 1, c + 1};
    std::sort(cl.begin(), cl.end());
    inst.clauses.push_back(std::move(cl));
    return inst.nclauses() - 1;
  }
};

struct RingHandles {
  std::vector<int> o, n;
};

// o_t + o_{t+1} + n_t = 1 and n_t + n_{t+1} + o_{t+1} = 1 jointly force the
// sliding-window system o_t + o_{t+1} + o_{t+2} = 1 whose cyclic solutions
// are exactly the three rotations of 1,0,0.
RingHandles add_ring(InstanceBuilder& b, int k) {
  RingHandles r;
  const int L = 3 * k;
  for (int t = 0; t < L; t++) r.o.push_back(b.new_var());
  for (int t = 0; t < L; t++) r.n.push_back(b.new_var());
  for (int t = 0; t < L; t++) b.add_clause(r.o[t], r.o[(t + 1) % L], r.n[t]);
  for (int t = 0; t < L; t++) b.add_clause(r.n[t], r.n[(t + 1) % L], r.o[(t + 1) % L]);
  return r;
}

Ring ring_from_handles(int k, const InstanceBuilder& b, const RingHandles& h) {
  Ring ring;
  ring.k = k;
  ring.fragment = b.inst;
  ring.outer = h.o;
  ring.inner = h.n;
  return ring;
}

struct GadgetHandles {
  std::vector<int> belt, m;
  RingHandles inner;
  std::vector<RingHandles> outers;
  std::vector<int> slot_positions;
};

// Belt semantics: with mu = [inner ring phase == 1], every block forces
// x_j + x_{j+1} = 1 - mu, so the belt is strictly alternating (mu=0) or all
// false (mu=1). Couplings tie the remaining belt degrees of freedom to ring
// phases without excluding any family; a non-modified outer ring kills the
// all-false family by demanding two distinct phases at once.
GadgetHandles add_variable_gadget(InstanceBuilder& b, int q,
                                  const std::vector<OuterRingSpec>& rings,
                                  const std::vector<int>& slot_positions) {
  if (q < 3) fail(ErrorKind::InvalidArgument, "variable gadget needs q >= 3");
  const int B = 2 * q;
  GadgetHandles g;
  g.slot_positions = slot_positions;

  std::vector<char> covered(B, 0);  // positions used by caps or slots
  for (const auto& spec : rings) {
    if (spec.cap_start < 0 || spec.cap_start >= B)
      fail(ErrorKind::InvalidPositions, "outer ring cap start out of range");
    for (int t = 0; t < 6; t++) {
      int pos = (spec.cap_start + t) % B;
      if (covered[pos]) fail(ErrorKind::InvalidPositions, "outer ring caps overlap");
      covered[pos] = 1;
    }
  }
  for (int s : slot_positions) {
    if (s < 0 || s >= B) fail(ErrorKind::InvalidPositions, "slot position out of range");
    if (covered[s]) fail(ErrorKind::InvalidPositions, "slot collides with an outer ring cap");
    covered[s] = 2;
  }

  // free positions -> adjacent pairs within maximal runs, singles for leftovers
  std::vector<std::pair<int, int>> free_pairs;
  std::vector<int> free_singles;
  {
    std::vector<char> handled(B, 0);
    for (int s = 0; s < B; s++) {
      if (covered[s] || handled[s]) continue;
      // walk back to the start of the maximal free run containing s
      int start = s;
      while (!covered[(start - 1 + B) % B] && !handled[(start - 1 + B) % B] &&
             (start - 1 + B) % B != s)
        start = (start - 1 + B) % B;
      int len = 0;
      while (len < B && !covered[(start + len) % B]) len++;
      for (int t = 0; t + 1 < len; t += 2)
        free_pairs.push_back({(start + t) % B, (start + t + 1) % B});
      if (len % 2 == 1) free_singles.push_back((start + len - 1) % B);
      for (int t = 0; t < len; t++) handled[(start + t) % B] = 1;
    }
  }

  const int spares = (int)free_pairs.size() + (int)free_singles.size();
  const int k_in = std::max(3, q + spares);

  for (int i = 0; i < B; i++) g.belt.push_back(b.new_var());
  for (int i = 0; i < q; i++) g.m.push_back(b.new_var());
  g.inner = add_ring(b, k_in);

  for (int i = 0; i < q; i++) {
    b.add_clause(g.belt[2 * i], g.belt[2 * i + 1], g.m[(i - 1 + q) % q]);      // K1_i
    b.add_clause(g.belt[2 * i + 1], g.belt[(2 * i + 2) % B], g.m[i]);          // K2_i
    b.add_clause(g.m[i], g.inner.o[3 * i], g.inner.o[3 * i + 2]);              // K3_i
  }

  int spare = q;  // next spare inner-ring group
  for (auto [p1, p2] : free_pairs) {
    // adjacent belt pair: one of each parity
    b.add_clause(g.belt[p1], g.belt[p2], g.inner.o[3 * spare + 1]);
    spare++;
  }
  for (int p : free_singles) {
    if (p % 2 == 0)
      b.add_clause(g.belt[p], g.inner.o[3 * spare + 1], g.inner.o[3 * spare + 2]);
    else
      b.add_clause(g.belt[p], g.inner.o[3 * spare], g.inner.o[3 * spare + 1]);
    spare++;
  }

  for (const auto& spec : rings) {
    RingHandles outer = add_ring(b, 3);
    int s = spec.cap_start;
    // attachment residues: (0,0,1) pins distinct phases for the all-false
    // belt (infeasible); (0,0,0) leaves it satisfiable
    int third = spec.modified ? 6 : 1;
    b.add_clause(g.belt[s % B], g.belt[(s + 1) % B], outer.o[0]);
    b.add_clause(g.belt[(s + 2) % B], g.belt[(s + 3) % B], outer.o[3]);
    b.add_clause(g.belt[(s + 4) % B], g.belt[(s + 5) % B], outer.o[third]);
    g.outers.push_back(outer);
  }
  return g;
}

}  // namespace

Ring build_ring(int k) {
  if (k < 3) fail(ErrorKind::KTooSmall, "a ring needs k >= 3, got " + std::to_string(k));
  InstanceBuilder b;
  RingHandles h = add_ring(b, k);
  validate_instance(b.inst);
  return ring_from_handles(k, b, h);
}

VariableGadget build_variable_gadget(int q, const std::vector<OuterRingSpec>& rings,
                                     const std::vector<int>& slot_positions) {
  InstanceBuilder b;
  GadgetHandles h = add_variable_gadget(b, q, rings, slot_positions);
  VariableGadget vg;
  vg.q = q;
  vg.fragment = b.inst;
  vg.belt = h.belt;
  vg.block_vars = h.m;
  vg.slots = h.slot_positions;
  for (size_t i = 0; i < h.outers.size(); i++) {
    Ring r;
    r.k = 3;
    r.outer = h.outers[i].o;
    r.inner = h.outers[i].n;
    vg.outer_rings.push_back(std::move(r));
  }
  vg.inner_ring.k = (int)h.inner.o.size() / 3;
  vg.inner_ring.outer = h.inner.o;
  vg.inner_ring.inner = h.inner.n;
  validate_instance(vg.fragment);

  // structural validators
  SatGraph sg = build_sat_graph(vg.fragment);
  if (!is_biconnected(sg.emb.g))
    fail(ErrorKind::InvalidPositions, "variable gadget is not 2-connected");
  // pick an outer face exposing every slot vertex
  FaceSet faces = trace_faces(sg.emb);
  if (!vg.slots.empty()) {
    int outer = -1;
    for (int f = 0; f < faces.face_count() && outer < 0; f++) {
      std::set<int> on(faces.walks[f].begin(), faces.walks[f].end());
      bool all = true;
      for (int s : vg.slots)
        if (!on.count(vg.belt[s])) {
          all = false;
          break;
        }
      if (all) outer = f;
    }
    if (outer < 0)
      fail(ErrorKind::InvalidPositions, "no face of the gadget exposes every slot");
    sg.emb.outer_face = outer;
  }
  if (!is_internally_3_connected(sg.emb))
    fail(ErrorKind::InvalidPositions, "variable gadget is not internally 3-connected");
  return vg;
}

ClauseGadget build_clause_gadget(std::array<int, 3> lits, int fresh_base) {
  for (int l : lits)
    if (l == 0) fail(ErrorKind::InvalidArgument, "zero literal");
  ClauseGadget cg;
  cg.p = fresh_base;
  cg.q = fresh_base + 1;
  cg.r = fresh_base + 2;
  cg.s = fresh_base + 3;
  cg.clauses[0] = {-lits[0], cg.p + 1, cg.r + 1};
  cg.clauses[1] = {lits[1], cg.p + 1, cg.q + 1};
  cg.clauses[2] = {-lits[2], cg.s + 1, cg.q + 1};
  return cg;
}

GadgetInstance transform(const SatInstance& inst3sat, const std::vector<std::vector<int>>* rotation) {
  validate_instance(inst3sat);
  if (inst3sat.variant != Variant::Sat3)
    fail(ErrorKind::PreconditionFailed, "transform expects a sat3 instance");
  for (size_t c = 0; c < inst3sat.clauses.size(); c++)
    if (inst3sat.clauses[c].size() != 3)
      fail(ErrorKind::PreconditionFailed,
           "clause " + std::to_string(c + 1) + " does not have exactly 3 literals");
  {
    auto freq = variable_frequencies(inst3sat);
    for (int v = 0; v < inst3sat.nvars; v++)
      if (freq[v] > 4)
        fail(ErrorKind::PreconditionFailed,
             "variable " + std::to_string(v + 1) + " appears in " + std::to_string(freq[v]) +
                 " clauses (at most 4 allowed)");
  }
  SatGraph sg = build_sat_graph(inst3sat, rotation);
  {
    FaceSet faces = trace_faces(sg.emb);
    if (!is_three_connected_plane(sg.emb, faces))
      fail(ErrorKind::PreconditionFailed, "the input SAT graph is not 3-connected");
  }

  const int n = inst3sat.nvars, m = inst3sat.nclauses();
  InstanceBuilder b;
  GadgetInstance gi;

  // polarity of each (variable, clause) incidence
  std::map<std::pair<int, int>, bool> negated;  // (v, c) -> sign
  for (int c = 0; c < m; c++)
    for (int lit : inst3sat.clauses[c]) negated[{std::abs(lit) - 1, c}] = lit < 0;

  // role of each incidence inside its clause gadget: roles 0 and 2 flip the
  // literal, role 1 keeps it. Roles follow the clause vertex's rotation,
  // started at its smallest neighbor for determinism.
  std::map<std::pair<int, int>, int> role;  // (v, c) -> 0,1,2
  for (int c = 0; c < m; c++) {
    const auto& rc = sg.emb.rot[n + c];
    int start = (int)(std::min_element(rc.begin(), rc.end()) - rc.begin());
    for (int i = 0; i < 3; i++) role[{rc[(start + i) % 3], c}] = i;
  }

  // variable gadgets; slot parity = 0 (even belt position) when the slot
  // must carry the variable's value, 1 when it must carry the negation
  std::map<std::pair<int, int>, int> slot_var;  // (v, c) -> belt variable id
  for (int v = 0; v < n; v++) {
    const auto& rv = sg.emb.rot[v];  // clause vertices in cyclic order
    const int d = (int)rv.size();
    std::vector<int> want_parity(d);
    for (int i = 0; i < d; i++) {
      int c = rv[i] - n;
      bool neg = negated[{v, c}];
      int r = role[{v, c}];
      bool flip = (r == 0 || r == 2);
      bool slot_is_negation = neg ^ flip;
      want_parity[i] = slot_is_negation ? 1 : 0;
    }
    const int q = 3 + d;
    const int B = 2 * q;
    std::vector<int> slot_pos(d);
    int pos = 6;
    for (int i = 0; i < d; i++) {
      if (pos % 2 != want_parity[i]) pos++;
      if (pos >= B) fail(ErrorKind::InvalidPositions, "slot layout overflow");
      slot_pos[i] = pos;
      pos++;
    }
    GadgetHandles h = add_variable_gadget(b, q, {OuterRingSpec{0, false}}, slot_pos);
    for (int i = 0; i < d; i++) {
      int c = rv[i] - n;
      slot_var[{v, c}] = h.belt[slot_pos[i]];
    }
    gi.provenance.variable_belt[v] = h.belt;
    std::vector<int> sv;
    for (int i = 0; i < d; i++) sv.push_back(h.belt[slot_pos[i]]);
    gi.provenance.variable_slots[v] = sv;
  }

  // clause gadgets: two modified vertex gadgets provide (p,r) and (q,s) on
  // consecutive degree-two belt vertices
  for (int c = 0; c < m; c++) {
    const auto& rc = sg.emb.rot[n + c];
    int start = (int)(std::min_element(rc.begin(), rc.end()) - rc.begin());
    std::array<int, 3> ordered_vars;
    for (int i = 0; i < 3; i++) ordered_vars[i] = rc[(start + i) % 3];

    GadgetHandles m1 = add_variable_gadget(b, 4, {OuterRingSpec{0, true}}, {6, 7});
    GadgetHandles m2 = add_variable_gadget(b, 4, {OuterRingSpec{0, true}}, {6, 7});
    int p = m1.belt[6], r = m1.belt[7];  // even slot carries the clause-facing pair
    int qv = m2.belt[6], s = m2.belt[7];

    int c1 = b.add_clause(slot_var[{ordered_vars[0], c}], p, r);
    int c2 = b.add_clause(slot_var[{ordered_vars[1], c}], p, qv);
    int c3 = b.add_clause(slot_var[{ordered_vars[2], c}], s, qv);
    gi.provenance.clause_clauses[c] = {c1, c2, c3};
    gi.provenance.clause_fresh[c] = {p, qv, r, s};
  }

  gi.instance = b.inst;
  validate_instance(gi.instance);

  // validators: positivity is structural; planarity, 3-connectivity, degree
  {
    auto freq = variable_frequencies(gi.instance);
    for (int v = 0; v < gi.instance.nvars; v++) {
      if (freq[v] > 4)
        fail(ErrorKind::InvalidPositions,
             "transformed variable " + std::to_string(v + 1) + " has frequency " +
                 std::to_string(freq[v]));
      if (freq[v] < 3)
        fail(ErrorKind::InvalidPositions,
             "transformed variable " + std::to_string(v + 1) + " has frequency " +
                 std::to_string(freq[v]) + " < 3");
    }
    SatGraph out_sg = build_sat_graph(gi.instance);
    FaceSet faces = trace_faces(out_sg.emb);
    if (!is_three_connected_plane(out_sg.emb, faces))
      fail(ErrorKind::InvalidPositions, "transformed instance is not 3-connected");
  }
  return gi;
}

Assignment extract_original_assignment(const GadgetInstance& gi, const SatInstance& original,
                                       const Assignment& transformed) {
  Assignment a(original.nvars, 0);
  for (int v = 0; v < original.nvars; v++) {
    const auto& belt = gi.provenance.variable_belt.at(v);
    a[v] = transformed[belt[0]];  // even belt positions carry the value
  }
  return a;
}

}  // namespace ppsat
