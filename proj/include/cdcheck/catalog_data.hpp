#pragma once

// Embedded catalog data. Same schema as the external files accepted by
// load_catalog_file(); `cdcheck catalog --family X --output json` prints it.

namespace cdcheck::data {

inline constexpr const char *families_json = R"json([
{
  "family": "F4",
  "q_floor": 3,
  "order": {"t": 1, "a": 24, "exps": {"1": 4, "2": 4, "3": 2, "4": 2, "6": 2, "8": 1, "12": 1}},
  "order_source": "external-standard",
  "a_H": 24, "b_H": 16, "c_H": 4,
  "ppart_cap": {"odd": {"t": 1, "a": 16}, "even": {"t": 2, "a": 13}},
  "top_phi": [12, 8, 6, 3],
  "entries": [
    {"label": "1", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 0, "exps": {}}, "source": "trivial character"},
    {"label": "St", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 24, "exps": {}}, "source": "F4 preamble: x not in {1, q^24}"},
    {"label": "1/4 q^4 Phi1^4 Phi2^4 Phi3^2 Phi6^2", "kind": "other", "version": "simple", "constraints": [],
     "degree": {"t": 4, "a": 4, "exps": {"1": 4, "2": 4, "3": 2, "6": 2}}, "source": "F4 clause (i)"},
    {"label": "semisimple:Φ_12-torus", "kind": "semisimple", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 0, "exps": {"1": 4, "2": 4, "3": 2, "4": 2, "6": 2, "8": 1}},
     "source": "F4 clauses (ii), (v); semisimple character with centralizer of order Phi12"},
    {"label": "semisimple:Φ_8-torus", "kind": "semisimple", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 0, "exps": {"1": 4, "2": 4, "3": 2, "4": 2, "6": 2, "12": 1}},
     "source": "F4 clauses (iii), (v)"},
    {"label": "Phi3 Phi6 Phi12", "kind": "other", "version": "simple", "constraints": [{"type": "q_odd"}],
     "degree": {"t": 1, "a": 0, "exps": {"3": 1, "6": 1, "12": 1}}, "source": "F4 clauses (iii), (vii), (viii)"},
    {"label": "φ_{2,4}'", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 2, "a": 1, "exps": {"4": 1, "8": 1, "12": 1}},
     "source": "F4 clause (iv); named in the step-one argument"},
    {"label": "q^3 Phi4^2 Phi8 Phi12", "kind": "other", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 3, "exps": {"4": 2, "8": 1, "12": 1}}, "source": "F4 clause (iv)"},
    {"label": "1/3 q^4 Phi1^4 Phi2^4 Phi4^2 Phi8", "kind": "other", "version": "simple", "constraints": [],
     "degree": {"t": 3, "a": 4, "exps": {"1": 4, "2": 4, "4": 2, "8": 1}}, "source": "F4 clauses (iv), (viii)"},
    {"label": "q^9 Phi4^2 Phi8 Phi12", "kind": "other", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 9, "exps": {"4": 2, "8": 1, "12": 1}}, "source": "F4 clause (iv)"},
    {"label": "φ_{2,16}'", "kind": "unipotent", "version": "simple", "constraints": [], "multiplicity": 2,
     "degree": {"t": 2, "a": 13, "exps": {"4": 1, "8": 1, "12": 1}},
     "source": "F4 clause (iv); phi_{2,16}' and phi_{2,16}'' in the graph automorphism argument"},
    {"label": "1/2 q Phi1^2 Phi3^2 Phi8", "kind": "other", "version": "simple", "constraints": [{"type": "q_even"}],
     "degree": {"t": 2, "a": 1, "exps": {"1": 2, "3": 2, "8": 1}}, "source": "F4 clause (vii)"}
  ],
  "torus_orders": [
    {"m": [12], "order": {"t": 1, "a": 0, "exps": {"12": 1}}, "entry": "semisimple:Φ_12-torus"},
    {"m": [8], "order": {"t": 1, "a": 0, "exps": {"8": 1}}, "entry": "semisimple:Φ_8-torus"}
  ]
},
{
  "family": "2E6",
  "q_floor": 2,
  "order": {"t": 1, "a": 36, "exps": {"1": 4, "2": 6, "3": 2, "4": 2, "6": 3, "8": 1, "10": 1, "12": 1, "18": 1}},
  "order_source": "external-standard",
  "a_H": 36, "b_H": 25, "c_H": 7,
  "ppart_cap": {"odd": {"t": 1, "a": 25}, "even": {"t": 1, "a": 25}},
  "top_phi": [18, 12, 8, 10],
  "entries": [
    {"label": "1", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 0, "exps": {}}, "source": "trivial character"},
    {"label": "St", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 36, "exps": {}}, "source": "2E6 preamble: x != q^36"},
    {"label": "²E6[θ^i]", "kind": "unipotent", "version": "simple", "constraints": [], "multiplicity": 2,
     "degree": {"t": 3, "a": 7, "exps": {"1": 4, "2": 6, "4": 2, "8": 1, "10": 1}}, "source": "2E6 clauses (i), (viii)"},
    {"label": "φ_{8,3}'", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 2, "a": 3, "exps": {"2": 4, "6": 2, "10": 1, "18": 1}}, "source": "2E6 clause (ii)"},
    {"label": "φ_{8,9}''", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 2, "a": 15, "exps": {"2": 4, "6": 2, "10": 1, "18": 1}}, "source": "2E6 clause (ii)"},
    {"label": "Phi3 Phi6^2 Phi12 Phi18", "kind": "other", "version": "simple", "constraints": [{"type": "q_gt", "k": 2}],
     "degree": {"t": 1, "a": 0, "exps": {"3": 1, "6": 2, "12": 1, "18": 1}}, "source": "2E6 clauses (iv), (viii)"},
    {"label": "semisimple:Φ_18-torus", "kind": "semisimple", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 0, "exps": {"1": 4, "2": 6, "3": 2, "4": 2, "6": 3, "8": 1, "10": 1, "12": 1}},
     "source": "2E6 clause (v)"},
    {"label": "semisimple:Φ_6Φ_12-torus", "kind": "semisimple", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 0, "exps": {"1": 4, "2": 6, "3": 2, "4": 2, "6": 2, "8": 1, "10": 1, "18": 1}},
     "source": "2E6 clause (v)"},
    {"label": "φ_{2,4}'", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 1, "exps": {"8": 1, "18": 1}}, "source": "2E6 clause (vii)"},
    {"label": "1/3 q^9 Phi1^3 Phi2^4 Phi3 Phi4^2 Phi6 Phi8 Phi10 Phi12", "kind": "other", "version": "sc",
     "constraints": [{"type": "cong", "c": 2, "m": 3}], "multiplicity": 6,
     "degree": {"t": 3, "a": 9, "exps": {"1": 3, "2": 4, "3": 1, "4": 2, "6": 1, "8": 1, "10": 1, "12": 1}},
     "source": "2E6 clause (x), simply connected group, 3 | q+1"},
    {"label": "q^9 Phi1 Phi3^2 Phi4^2 Phi8 Phi10 Phi12 Phi18", "kind": "other", "version": "ad",
     "constraints": [{"type": "cong", "c": 2, "m": 3}], "multiplicity": 1,
     "degree": {"t": 1, "a": 9, "exps": {"1": 1, "3": 2, "4": 2, "8": 1, "10": 1, "12": 1, "18": 1}},
     "source": "2E6 clause (x), adjoint group, 3 | q+1"}
  ],
  "torus_orders": [
    {"m": [18], "order": {"t": 1, "a": 0, "exps": {"18": 1}}, "entry": "semisimple:Φ_18-torus"},
    {"m": [6, 12], "order": {"t": 1, "a": 0, "exps": {"6": 1, "12": 1}}, "entry": "semisimple:Φ_6Φ_12-torus"}
  ]
},
{
  "family": "E6",
  "q_floor": 2,
  "order": {"t": 1, "a": 36, "exps": {"1": 6, "2": 4, "3": 3, "4": 2, "5": 1, "6": 2, "8": 1, "9": 1, "12": 1}},
  "order_source": "external-standard",
  "a_H": 36, "b_H": 25, "c_H": 7,
  "ppart_cap": {"odd": {"t": 1, "a": 25}, "even": {"t": 1, "a": 25}},
  "top_phi": [12, 9, 8, 5],
  "entries": [
    {"label": "1", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 0, "exps": {}}, "source": "trivial character"},
    {"label": "St", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 36, "exps": {}}, "source": "E6 preamble: x != q^36"},
    {"label": "E6[θ^i]", "kind": "unipotent", "version": "simple", "constraints": [], "multiplicity": 2,
     "degree": {"t": 3, "a": 7, "exps": {"1": 6, "2": 4, "4": 2, "5": 1, "8": 1}}, "source": "E6 clauses (i), (viii)"},
    {"label": "(D4,1)", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 2, "a": 3, "exps": {"1": 4, "3": 2, "5": 1, "9": 1}}, "source": "E6 clause (iii)"},
    {"label": "(D4,ε)", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 2, "a": 15, "exps": {"1": 4, "3": 2, "5": 1, "9": 1}}, "source": "E6 clause (iii)"},
    {"label": "Phi3^2 Phi6 Phi9 Phi12", "kind": "other", "version": "simple", "constraints": [{"type": "q_gt", "k": 2}],
     "degree": {"t": 1, "a": 0, "exps": {"3": 2, "6": 1, "9": 1, "12": 1}}, "source": "E6 clauses (iv), (viii)"},
    {"label": "semisimple:Φ_3Φ_12-torus", "kind": "semisimple", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 0, "exps": {"1": 6, "2": 4, "3": 2, "4": 2, "5": 1, "6": 2, "8": 1, "9": 1}},
     "source": "E6 clause (v); centralizer of order Phi12 Phi3"},
    {"label": "semisimple:Φ_9-torus", "kind": "semisimple", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 0, "exps": {"1": 6, "2": 4, "3": 3, "4": 2, "5": 1, "6": 2, "8": 1, "12": 1}},
     "source": "E6 clause (v); centralizer of order Phi9"},
    {"label": "φ_{6,1}", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 1, "exps": {"8": 1, "9": 1}}, "source": "E6 clause (vii)"},
    {"label": "1/3 q^9 Phi1^4 Phi2^3 Phi3 Phi4^2 Phi5 Phi6 Phi8 Phi12", "kind": "other", "version": "sc",
     "constraints": [{"type": "cong", "c": 1, "m": 3}], "multiplicity": 6,
     "degree": {"t": 3, "a": 9, "exps": {"1": 4, "2": 3, "3": 1, "4": 2, "5": 1, "6": 1, "8": 1, "12": 1}},
     "source": "E6 clause (x), simply connected group, 3 | q-1"},
    {"label": "q^9 Phi2 Phi4^2 Phi5 Phi6^2 Phi8 Phi9 Phi12", "kind": "other", "version": "ad",
     "constraints": [{"type": "cong", "c": 1, "m": 3}], "multiplicity": 1,
     "degree": {"t": 1, "a": 9, "exps": {"2": 1, "4": 2, "5": 1, "6": 2, "8": 1, "9": 1, "12": 1}},
     "source": "E6 clause (x), adjoint group, 3 | q-1"}
  ],
  "torus_orders": [
    {"m": [3, 12], "order": {"t": 1, "a": 0, "exps": {"3": 1, "12": 1}}, "entry": "semisimple:Φ_3Φ_12-torus"},
    {"m": [9], "order": {"t": 1, "a": 0, "exps": {"9": 1}}, "entry": "semisimple:Φ_9-torus"}
  ]
},
{
  "family": "E7",
  "q_floor": 2,
  "order": {"t": 1, "a": 63, "exps": {"1": 7, "2": 7, "3": 3, "4": 2, "5": 1, "6": 3, "7": 1, "8": 1, "9": 1, "10": 1, "12": 1, "14": 1, "18": 1}},
  "order_source": "external-standard",
  "a_H": 63, "b_H": 46, "c_H": 11,
  "ppart_cap": {"odd": {"t": 1, "a": 46}, "even": {"t": 1, "a": 46}},
  "top_phi": [18, 14, 12, 9, 7],
  "entries": [
    {"label": "1", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 0, "exps": {}}, "source": "trivial character"},
    {"label": "St", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 63, "exps": {}}, "source": "E7 preamble: x != q^63"},
    {"label": "E7[±ξ]", "kind": "unipotent", "version": "simple", "constraints": [], "multiplicity": 2,
     "degree": {"t": 2, "a": 11, "exps": {"1": 7, "3": 3, "4": 2, "5": 1, "7": 1, "8": 1, "9": 1, "12": 1}},
     "source": "E7 clause (i)"},
    {"label": "(D4,ε1)", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 2, "a": 4, "exps": {"1": 4, "3": 2, "5": 1, "7": 1, "9": 1, "10": 1, "18": 1}}, "source": "E7 clause (ii)"},
    {"label": "(D4,ε2)", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 2, "a": 25, "exps": {"1": 4, "3": 2, "5": 1, "7": 1, "9": 1, "10": 1, "18": 1}}, "source": "E7 clause (ii)"},
    {"label": "(E6[θ^i],1)", "kind": "unipotent", "version": "simple", "constraints": [], "multiplicity": 2,
     "degree": {"t": 3, "a": 7, "exps": {"1": 6, "2": 6, "4": 2, "5": 1, "7": 1, "8": 1, "10": 1, "14": 1}},
     "source": "E7 clause (iii)"},
    {"label": "(E6[θ^i],ε)", "kind": "unipotent", "version": "simple", "constraints": [], "multiplicity": 2,
     "degree": {"t": 3, "a": 16, "exps": {"1": 6, "2": 6, "4": 2, "5": 1, "7": 1, "8": 1, "10": 1, "14": 1}},
     "source": "E7 clause (iii)"},
    {"label": "φ_{512,11}", "kind": "unipotent", "version": "simple", "constraints": [], "multiplicity": 2,
     "degree": {"t": 2, "a": 11, "exps": {"2": 7, "4": 2, "6": 3, "8": 1, "10": 1, "12": 1, "14": 1, "18": 1}},
     "source": "E7 clause (iv); phi_{512,11} and phi_{512,12}"},
    {"label": "semisimple:Φ_2Φ_18-torus", "kind": "semisimple", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 0, "exps": {"1": 7, "2": 6, "3": 3, "4": 2, "5": 1, "6": 3, "7": 1, "8": 1, "9": 1, "10": 1, "12": 1, "14": 1}},
     "source": "E7 clause (v)"},
    {"label": "semisimple:Φ_2Φ_14-torus", "kind": "semisimple", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 0, "exps": {"1": 7, "2": 6, "3": 3, "4": 2, "5": 1, "6": 3, "7": 1, "8": 1, "9": 1, "10": 1, "12": 1, "18": 1}},
     "source": "E7 clause (v)"},
    {"label": "φ_{7,1}", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 1, "exps": {"7": 1, "12": 1, "14": 1}}, "source": "E7 clause (vii)"},
    {"label": "q^14 Phi1^3 Phi2^2 Phi3^2 Phi5 Phi6^2 Phi7 Phi9 Phi10 Phi12 Phi14 Phi18", "kind": "other", "version": "sc",
     "constraints": [{"type": "q_odd"}],
     "degree": {"t": 1, "a": 14, "exps": {"1": 3, "2": 2, "3": 2, "5": 1, "6": 2, "7": 1, "9": 1, "10": 1, "12": 1, "14": 1, "18": 1}},
     "source": "E7 clause (x), simply connected group, q odd; multiplicity (q - eps)/4"},
    {"label": "q^28 Phi2^3 Phi3 Phi6^2 Phi9 Phi10 Phi12 Phi14 Phi18", "kind": "other", "version": "ad",
     "constraints": [{"type": "cong", "c": 1, "m": 4}],
     "degree": {"t": 1, "a": 28, "exps": {"2": 3, "3": 1, "6": 2, "9": 1, "10": 1, "12": 1, "14": 1, "18": 1}},
     "source": "E7 clause (x), adjoint group, q = 1 mod 4"},
    {"label": "q^28 Phi1^3 Phi3^2 Phi5 Phi6 Phi7 Phi9 Phi12 Phi18", "kind": "other", "version": "ad",
     "constraints": [{"type": "cong", "c": 3, "m": 4}],
     "degree": {"t": 1, "a": 28, "exps": {"1": 3, "3": 2, "5": 1, "6": 1, "7": 1, "9": 1, "12": 1, "18": 1}},
     "source": "E7 clause (x), adjoint group, q = -1 mod 4"}
  ],
  "torus_orders": [
    {"m": [2, 18], "order": {"t": 1, "a": 0, "exps": {"2": 1, "18": 1}}, "entry": "semisimple:Φ_2Φ_18-torus"},
    {"m": [2, 14], "order": {"t": 1, "a": 0, "exps": {"2": 1, "14": 1}}, "entry": "semisimple:Φ_2Φ_14-torus"}
  ]
},
{
  "family": "E8",
  "q_floor": 2,
  "order": {"t": 1, "a": 120, "exps": {"1": 8, "2": 8, "3": 4, "4": 4, "5": 2, "6": 4, "7": 1, "8": 2, "9": 1, "10": 2, "12": 2, "14": 1, "15": 1, "18": 1, "20": 1, "24": 1, "30": 1}},
  "order_source": "external-standard",
  "a_H": 120, "b_H": 91, "c_H": 16,
  "ppart_cap": {"odd": {"t": 1, "a": 91}, "even": {"t": 1, "a": 91}},
  "top_phi": [30, 24, 20, 15, 14],
  "entries": [
    {"label": "1", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 0, "exps": {}}, "source": "trivial character"},
    {"label": "St", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 120, "exps": {}}, "source": "E8 preamble: x != q^120"},
    {"label": "E8[-θ]", "kind": "unipotent", "version": "simple", "constraints": [], "multiplicity": 2,
     "degree": {"t": 6, "a": 16, "exps": {"1": 8, "2": 6, "3": 2, "4": 4, "5": 2, "7": 1, "8": 2, "9": 1, "10": 2, "12": 1, "14": 1, "15": 1, "20": 1}},
     "source": "E8 clause (i); E8[-theta] and E8[-theta^2]"},
    {"label": "E8[±i]", "kind": "unipotent", "version": "simple", "constraints": [], "multiplicity": 2,
     "degree": {"t": 4, "a": 16, "exps": {"1": 8, "2": 8, "3": 4, "5": 2, "6": 4, "7": 1, "9": 1, "10": 2, "14": 1, "15": 1, "18": 1, "30": 1}},
     "source": "E8 clause (ii)"},
    {"label": "E8[ζ^k]", "kind": "unipotent", "version": "simple", "constraints": [], "multiplicity": 4,
     "degree": {"t": 5, "a": 16, "exps": {"1": 8, "2": 8, "3": 4, "4": 4, "6": 4, "7": 1, "8": 2, "9": 1, "12": 2, "14": 1, "18": 1, "24": 1}},
     "source": "E8 clause (iii)"},
    {"label": "(D4,φ_{1,0})", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 2, "a": 3, "exps": {"1": 4, "3": 2, "5": 2, "7": 1, "8": 1, "9": 1, "14": 1, "15": 1, "24": 1}},
     "source": "E8 clause (iii)"},
    {"label": "(D4,φ_{1,24})", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 2, "a": 63, "exps": {"1": 4, "3": 2, "5": 2, "7": 1, "8": 1, "9": 1, "14": 1, "15": 1, "24": 1}},
     "source": "E8 clause (iii)"},
    {"label": "semisimple:Φ_30-torus", "kind": "semisimple", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 0, "exps": {"1": 8, "2": 8, "3": 4, "4": 4, "5": 2, "6": 4, "7": 1, "8": 2, "9": 1, "10": 2, "12": 2, "14": 1, "15": 1, "18": 1, "20": 1, "24": 1}},
     "source": "E8 clause (v), |H|_p' / Phi30"},
    {"label": "semisimple:Φ_24-torus", "kind": "semisimple", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 0, "exps": {"1": 8, "2": 8, "3": 4, "4": 4, "5": 2, "6": 4, "7": 1, "8": 2, "9": 1, "10": 2, "12": 2, "14": 1, "15": 1, "18": 1, "20": 1, "30": 1}},
     "source": "E8 clause (v), |H|_p' / Phi24"},
    {"label": "semisimple:Φ_20-torus", "kind": "semisimple", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 0, "exps": {"1": 8, "2": 8, "3": 4, "4": 4, "5": 2, "6": 4, "7": 1, "8": 2, "9": 1, "10": 2, "12": 2, "14": 1, "15": 1, "18": 1, "24": 1, "30": 1}},
     "source": "E8 clause (v), |H|_p' / Phi20"},
    {"label": "φ_{8,1}", "kind": "unipotent", "version": "simple", "constraints": [],
     "degree": {"t": 1, "a": 1, "exps": {"4": 2, "8": 1, "12": 1, "20": 1, "24": 1}}, "source": "E8 clause (vii)"}
  ],
  "torus_orders": [
    {"m": [30], "order": {"t": 1, "a": 0, "exps": {"30": 1}}, "entry": "semisimple:Φ_30-torus"},
    {"m": [24], "order": {"t": 1, "a": 0, "exps": {"24": 1}}, "entry": "semisimple:Φ_24-torus"},
    {"m": [20], "order": {"t": 1, "a": 0, "exps": {"20": 1}}, "entry": "semisimple:Φ_20-torus"}
  ]
}
])json";

inline constexpr const char *sporadic_json = R"json([
{"group": "M11", "pairs": [{"label": "χ8", "factors": {"2": 2, "11": 1}}, {"label": "χ9", "factors": {"3": 2, "5": 1}}]},
{"group": "M12", "pairs": [{"label": "χ7", "factors": {"2": 1, "3": 3}}, {"label": "χ8", "factors": {"5": 1, "11": 1}}]},
{"group": "J1", "pairs": [{"label": "χ5", "factors": {"2": 2, "19": 1}}, {"label": "χ6", "factors": {"7": 1, "11": 1}}]},
{"group": "M22", "pairs": [{"label": "χ2", "factors": {"3": 1, "7": 1}}, {"label": "χ5", "factors": {"5": 1, "11": 1}}]},
{"group": "J2", "pairs": [{"label": "χ6", "factors": {"2": 2, "3": 2}}, {"label": "χ13", "factors": {"5": 2, "7": 1}}]},
{"group": "M23", "pairs": [{"label": "χ3", "factors": {"3": 2, "5": 1}}, {"label": "χ9", "factors": {"11": 1, "23": 1}}]},
{"group": "HS", "pairs": [{"label": "χ2", "factors": {"2": 1, "11": 1}}, {"label": "χ7", "factors": {"5": 2, "7": 1}}]},
{"group": "J3", "pairs": [{"label": "χ6", "factors": {"2": 2, "3": 4}}, {"label": "χ13", "factors": {"5": 1, "17": 1, "19": 1}}]},
{"group": "M24", "pairs": [{"label": "χ7", "factors": {"2": 2, "3": 2, "7": 1}}, {"label": "χ8", "factors": {"11": 1, "23": 1}}]},
{"group": "McL", "pairs": [{"label": "χ2", "factors": {"2": 1, "11": 1}}, {"label": "χ14", "factors": {"3": 6, "7": 1}}]},
{"group": "He", "pairs": [{"label": "χ9", "factors": {"3": 1, "5": 2, "17": 1}}, {"label": "χ15", "factors": {"2": 7, "7": 2}}]},
{"group": "Ru", "pairs": [{"label": "χ5", "factors": {"3": 3, "29": 1}}, {"label": "χ20", "factors": {"2": 2, "5": 3, "7": 1, "13": 1}}]},
{"group": "Suz", "pairs": [{"label": "χ2", "factors": {"11": 1, "13": 1}}, {"label": "χ43", "factors": {"2": 10, "3": 5}}]},
{"group": "2F4(2)'", "pairs": [{"label": "χ8", "factors": {"5": 2, "13": 1}}, {"label": "χ20", "factors": {"2": 6, "3": 3}}]},
{"group": "O'N", "pairs": [{"label": "χ2", "factors": {"2": 6, "3": 2, "19": 1}}, {"label": "χ19", "factors": {"7": 3, "11": 1, "31": 1}}]},
{"group": "Co3", "pairs": [{"label": "χ3", "factors": {"11": 1, "23": 1}}, {"label": "χ6", "factors": {"2": 7, "7": 1}}]},
{"group": "Co2", "pairs": [{"label": "χ3", "factors": {"11": 1, "23": 1}}, {"label": "χ22", "factors": {"3": 6, "5": 3}}]},
{"group": "Fi22", "pairs": [{"label": "χ56", "factors": {"2": 17, "11": 1}}, {"label": "χ57", "factors": {"3": 9, "7": 1, "13": 1}}]},
{"group": "HN", "pairs": [{"label": "χ10", "factors": {"3": 4, "11": 1, "19": 1}}, {"label": "χ45", "factors": {"2": 10, "5": 5}}]},
{"group": "Ly", "pairs": [{"label": "χ7", "factors": {"2": 8, "7": 1, "67": 1}}, {"label": "χ50", "factors": {"3": 1, "5": 6, "31": 1, "37": 1}}]},
{"group": "Th", "pairs": [{"label": "χ2", "factors": {"2": 3, "31": 1}}, {"label": "χ7", "factors": {"5": 3, "13": 1, "19": 1}}]},
{"group": "Fi23", "pairs": [{"label": "χ4", "factors": {"13": 1, "17": 1, "23": 1}}, {"label": "χ94", "factors": {"2": 18, "5": 2, "7": 1, "11": 1}}]},
{"group": "Co1", "pairs": [{"label": "χ3", "factors": {"13": 1, "23": 1}}, {"label": "χ17", "factors": {"2": 1, "5": 4, "7": 2, "11": 1}}]},
{"group": "J4", "pairs": [{"label": "χ2", "factors": {"31": 1, "43": 1}}, {"label": "χ11", "factors": {"2": 3, "3": 2, "23": 1, "29": 1, "37": 1}}]},
{"group": "Fi24'", "pairs": [{"label": "χ2", "factors": {"13": 1, "23": 1, "29": 1}}, {"label": "χ6", "factors": {"5": 2, "7": 3, "11": 1, "17": 1}}]},
{"group": "B", "pairs": [{"label": "χ2", "factors": {"3": 1, "31": 1, "47": 1}}, {"label": "χ119", "factors": {"2": 39, "11": 1, "19": 1, "23": 1}}]},
{"group": "M", "pairs": [{"label": "χ2", "factors": {"47": 1, "59": 1, "71": 1}}, {"label": "χ16", "factors": {"5": 9, "7": 6, "11": 2, "17": 1, "19": 1}}]}
])json";

} // namespace cdcheck::data
