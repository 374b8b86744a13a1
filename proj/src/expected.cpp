#include "mcy/expected.hpp"

namespace mcy {

// Embedded copy of assets/expected_values.json; a unit test keeps the two
// in sync.
const char* expected_values_json() {
  return R"mcyjson({
 "version": 1,
 "sigma_combinatorics": {
  "ref": "Remark 2.5; Prop 2.7; proof of Prop 4.1",
  "lattice_size": 21,
  "maximal_chains": "33",
  "edges": 17,
  "height": 9,
  "pure": true,
  "elements": 12
 },
 "sigma_report": {
  "ref": "Prop 2.7",
  "gorenstein": true,
  "index": 9,
  "locally_factorial": true,
  "essential_hole_color": 2,
  "singular_dim": 5,
  "singular_degree": "1",
  "singular_codim": 7
 },
 "classification": {
  "ref": "Prop 3.1",
  "classes": [
   [
    "P4",
    [
     5
    ]
   ],
   [
    "P5",
    [
     2,
     4
    ]
   ],
   [
    "P5",
    [
     3,
     3
    ]
   ],
   [
    "P6",
    [
     2,
     2,
     3
    ]
   ],
   [
    "P7",
    [
     2,
     2,
     2,
     2
    ]
   ],
   [
    "G(2,5)",
    [
     1,
     1,
     3
    ]
   ],
   [
    "G(2,5)",
    [
     1,
     2,
     2
    ]
   ],
   [
    "G(2,6)",
    [
     1,
     1,
     1,
     1,
     2
    ]
   ],
   [
    "G(3,6)",
    [
     1,
     1,
     1,
     1,
     1,
     1
    ]
   ],
   [
    "G(2,7)",
    [
     1,
     1,
     1,
     1,
     1,
     1,
     1
    ]
   ],
   [
    "OG(5,10)",
    [
     1,
     1,
     1,
     1,
     1,
     1,
     2
    ]
   ],
   [
    "Sigma",
    [
     1,
     1,
     1,
     1,
     1,
     1,
     1,
     1,
     1
    ]
   ]
  ]
 },
 "sigma_invariants": {
  "ref": "Prop 4.2 and its proof; Thm 5.1",
  "deg": "33",
  "chi_o1": "12",
  "c2_h": "78",
  "h11_y": "5",
  "h21_y": "37",
  "chi_y": "-64",
  "nodes": "19",
  "chi_x": "-102",
  "h21_x": "52",
  "facet_sum": "59",
  "some_facet_l9": "3"
 },
 "sigma_period": {
  "ref": "5.2.1 display",
  "coefficients": [
   "1",
   "7",
   "199",
   "8359",
   "423751",
   "23973757"
  ]
 },
 "sigma_pf_operator": {
  "ref": "Prop 5.4",
  "coeffs": [
   [
    "0",
    "0",
    "0",
    "0",
    "121"
   ],
   [
    "-847",
    "-5929",
    "-16170",
    "-20482",
    "-10010"
   ],
   [
    "-11198",
    "-55253",
    "-103725",
    "-89990",
    "-32126"
   ],
   [
    "-1716",
    "-20625",
    "-63474",
    "-74184",
    "-28723"
   ],
   [
    "-770",
    "-4991",
    "-13167",
    "-16352",
    "-7945"
   ],
   [
    "-49",
    "-196",
    "-294",
    "-196",
    "-49"
   ]
  ]
 },
 "riemann_scheme": {
  "ref": "5.2.2 display",
  "discriminant": [
   "-1",
   "84",
   "159",
   "1"
  ],
  "apparent_point": "-11/7",
  "exponents_at_zero": [
   "0",
   "0",
   "0",
   "0"
  ],
  "exponents_at_conifolds": [
   "0",
   "1",
   "1",
   "2"
  ],
  "exponents_at_apparent": [
   "0",
   "1",
   "3",
   "4"
  ],
  "exponents_at_infinity": [
   "1",
   "1",
   "1",
   "1"
  ]
 },
 "quantum_operators": {
  "ref": "Appendix A",
  "og510": [
   [
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "-1",
    "5",
    "-10",
    "10",
    "-5",
    "1"
   ],
   [
    "0",
    "0",
    "0",
    "0",
    "0",
    "-5",
    "-27",
    "-51",
    "-34",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0"
   ],
   [
    "1",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0"
   ]
  ],
  "op2": [
   [
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "-1",
    "9",
    "-36",
    "84",
    "-126",
    "126",
    "-84",
    "36",
    "-9",
    "1"
   ],
   [
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "-12",
    "-105",
    "-378",
    "-702",
    "-675",
    "-270",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0"
   ],
   [
    "-24",
    "-54",
    "-27",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0",
    "0"
   ]
  ]
 },
 "appendix_pf_operators": {
  "ref": "Appendix A",
  "og510_16_2": [
   [
    "0",
    "0",
    "0",
    "0",
    "1"
   ],
   [
    "-10",
    "-74",
    "-210",
    "-272",
    "-136"
   ],
   [
    "12",
    "56",
    "92",
    "64",
    "16"
   ]
  ],
  "og510_k3": [
   [
    "0",
    "0",
    "0",
    "1"
   ],
   [
    "-5",
    "-27",
    "-51",
    "-34"
   ],
   [
    "1",
    "3",
    "3",
    "1"
   ]
  ],
  "op2_cy4": [
   [
    "0",
    "0",
    "0",
    "0",
    "0",
    "1"
   ],
   [
    "-12",
    "-105",
    "-378",
    "-702",
    "-675",
    "-270"
   ],
   [
    "-24",
    "-126",
    "-261",
    "-267",
    "-135",
    "-27"
   ]
  ]
 },
 "monodromy": {
  "ref": "5.2.2 results (1)-(3)",
  "a": "-1/2",
  "c": "-1",
  "z_invariants": {
   "deg": "21",
   "c2_h": "66",
   "chi": "-102"
  },
  "mx": {
   "zeta1": [
    [
     169,
     -80,
     32,
     64
    ],
    [
     84,
     -39,
     16,
     32
    ],
    [
     210,
     -100,
     41,
     80
    ],
    [
     -441,
     210,
     -84,
     -167
    ]
   ],
   "zeta2": [
    [
     13,
     -8,
     2,
     4
    ],
    [
     6,
     -3,
     1,
     2
    ],
    [
     24,
     -16,
     5,
     8
    ],
    [
     -36,
     24,
     -6,
     -11
    ]
   ],
   "zero": [
    [
     1,
     0,
     0,
     0
    ],
    [
     1,
     1,
     0,
     0
    ],
    [
     16,
     33,
     1,
     0
    ],
    [
     -12,
     -17,
     -1,
     1
    ]
   ],
   "zeta3": [
    [
     1,
     0,
     0,
     1
    ],
    [
     0,
     1,
     0,
     0
    ],
    [
     0,
     0,
     1,
     0
    ],
    [
     0,
     0,
     0,
     1
    ]
   ],
   "infinity": [
    [
     286,
     -130,
     55,
     111
    ],
    [
     89,
     -43,
     17,
     34
    ],
    [
     -307,
     127,
     -60,
     -122
    ],
    [
     -465,
     218,
     -89,
     -179
    ]
   ]
  },
  "mz": {
   "zeta1": [
    [
     1,
     0,
     0,
     1
    ],
    [
     0,
     1,
     0,
     0
    ],
    [
     0,
     0,
     1,
     0
    ],
    [
     0,
     0,
     0,
     1
    ]
   ],
   "zeta2": [
    [
     1,
     3,
     0,
     1
    ],
    [
     0,
     1,
     0,
     0
    ],
    [
     0,
     -9,
     1,
     -3
    ],
    [
     0,
     0,
     0,
     1
    ]
   ],
   "zero": [
    [
     343,
     -17,
     83,
     168
    ],
    [
     104,
     -9,
     25,
     50
    ],
    [
     -496,
     8,
     -121,
     -247
    ],
    [
     -432,
     32,
     -104,
     -209
    ]
   ],
   "zeta3": [
    [
     211,
     -20,
     50,
     100
    ],
    [
     105,
     -9,
     25,
     50
    ],
    [
     42,
     -4,
     11,
     20
    ],
    [
     -441,
     42,
     -105,
     -209
    ]
   ],
   "infinity": [
    [
     1,
     0,
     0,
     0
    ],
    [
     1,
     1,
     0,
     0
    ],
    [
     10,
     21,
     1,
     0
    ],
    [
     -9,
     -11,
     -1,
     1
    ]
   ]
  },
  "s_xz": [
   [
    8,
    4,
    2,
    5
   ],
   [
    4,
    0,
    1,
    2
   ],
   [
    10,
    -25,
    2,
    -1
   ],
   [
    -21,
    2,
    -5,
    -10
   ]
  ]
 },
 "bps": {
  "ref": "Appendix B tables, genus 0 columns",
  "x_n0": [
   "252",
   "1854",
   "27156",
   "567063",
   "14514039",
   "424256409",
   "13599543618",
   "466563312360",
   "16861067232735",
   "634912711612848",
   "24717672325914858"
  ],
  "z_n0": [
   "387",
   "4671",
   "124323",
   "4782996",
   "226411803",
   "12249769449",
   "727224033330",
   "46217599569117",
   "3094575464496057",
   "215917815744645750"
  ]
 }
})mcyjson";
}

}  // namespace mcy
