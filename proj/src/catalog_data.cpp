// The built-in 30-model catalog as a JSON document (schema k3fib-catalog/1).
#include "k3fib/catalog.hpp"

namespace k3fib {

const char* builtin_catalog_json() {
  static const char* text = R"k3fib({
 "schema": "k3fib-catalog/1",
 "entries": [
  {
   "id": 1,
   "letter": "s",
   "parameter": "s",
   "equation": "V^2 + (s + 1/s - 2)UV = U(U-1)^2, scaled by u = s",
   "a": {
    "a1": [
     "1",
     "-2",
     "1"
    ],
    "a2": [
     "0",
     "0",
     "-2"
    ],
    "a4": [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   },
   "fibers": [
    {
     "type": "I8",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I8",
     "place": "inf"
    },
    {
     "type": "I4",
     "place": [
      "-1",
      "1"
     ]
    },
    {
     "type": "I2",
     "place": [
      "1",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "1",
      "-6",
      "1"
     ]
    }
   ],
   "reducible": [
    "A1",
    "A3",
    "A7",
    "A7"
   ],
   "rank": 0,
   "torsion": [
    8
   ],
   "raw_a": {
    "a1": [
     [
      "1",
      "-2",
      "1"
     ],
     [
      "0",
      "1"
     ]
    ],
    "a2": [
     [
      "-2"
     ],
     [
      "1"
     ]
    ],
    "a4": [
     [
      "1"
     ],
     [
      "1"
     ]
    ]
   },
   "u": [
    "0",
    "1"
   ],
   "points": [
    {
     "x": [
      [
       "0",
       "0",
       "0",
       "1"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0",
       "0",
       "0",
       "-1",
       "1"
      ],
      [
       "1"
      ]
     ],
     "order": 8
    }
   ],
   "maps": {
    "coords": "raw",
    "X": "(-x^2+x)/y",
    "Y": "y/(x-1)",
    "Z": "p"
   }
  },
  {
   "id": 2,
   "letter": "k",
   "parameter": "k",
   "equation": "y^2 - x(k^2-2k+2)y = x(x-1)(x-k^2)",
   "a": {
    "a1": [
     "-2",
     "2",
     "-1"
    ],
    "a2": [
     "-1",
     "0",
     "-1"
    ],
    "a4": [
     "0",
     "0",
     "1"
    ]
   },
   "fibers": [
    {
     "type": "I1*",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I12",
     "place": "inf"
    },
    {
     "type": "I2",
     "place": [
      "-2",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "-4",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "4",
      "0",
      "1"
     ]
    }
   ],
   "reducible": [
    "A11",
    "A1",
    "D5"
   ],
   "rank": 1,
   "torsion": [
    4
   ],
   "points": [
    {
     "x": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "order": 2
    },
    {
     "x": [
      [
       "0",
       "1"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0",
       "1"
      ],
      [
       "1"
      ]
     ],
     "order": 4
    },
    {
     "x": [
      [
       "1"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "height": "4/3",
     "generator": true
    }
   ],
   "maps": {
    "coords": "normalized",
    "X": "(2*p^5*x^2-p^5*x*y-2*p^4*x^2+2*p^4*x*y-3*p^3*x^3+p^3*x^2*y+2*p^3*x^2-3*p^3*x*y+p^3*y^2+2*p^2*x^3-2*p^2*x^2*y+p*x^4-2*p*x^3+3*p*x^2*y-p*x*y^2)/(p^4*x^3+3*p^4*x^2-p^4*x*y-4*p^3*x^3-4*p^3*x^2+2*p^3*x*y+4*p^2*x^3-p^2*x^2*y+4*p^2*x^2-4*p^2*x*y+p^2*y^2-4*p*x^3+2*p*x^2*y+x^4)",
    "Y": "(p^5*x^3+p^5*x^2-4*p^4*x^3-2*p^4*x^2+7*p^3*x^3-2*p^3*x^2*y+2*p^3*x^2-p^3*x*y-6*p^2*x^3+4*p^2*x^2*y+2*p*x^3-3*p*x^2*y+p*x*y^2)/(p^4*x^3+3*p^4*x^2-p^4*x*y-4*p^3*x^3-4*p^3*x^2+2*p^3*x*y+4*p^2*x^3-p^2*x^2*y+4*p^2*x^2-4*p^2*x*y+p^2*y^2-4*p*x^3+2*p*x^2*y+x^4)",
    "Z": "(p^3*x-2*p^2*x+2*p*x-p*y)/(-p^2*x+x^2)"
   },
   "notes": "printed birational maps corrected: the published pair fails the surface identity"
  },
  {
   "id": 3,
   "letter": "v",
   "parameter": "v",
   "equation": "y^2 + (v+1)^2 xy - v^2(1+2v)y = (x-v)(x-v^2)(x-v^2-v^3)",
   "a": {
    "a1": [
     "1",
     "2",
     "1"
    ],
    "a3": [
     "0",
     "0",
     "-1",
     "-2"
    ],
    "a2": [
     "0",
     "-1",
     "-2",
     "-1"
    ],
    "a4": [
     "0",
     "0",
     "0",
     "2",
     "2",
     "1"
    ],
    "a6": [
     "0",
     "0",
     "0",
     "0",
     "0",
     "-1",
     "-1"
    ]
   },
   "fibers": [
    {
     "type": "I8",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I10",
     "place": "inf"
    },
    {
     "type": "I1",
     "place": [
      "2",
      "0",
      "39",
      "0",
      "-5",
      "0",
      "1"
     ]
    }
   ],
   "reducible": [
    "A7",
    "A9"
   ],
   "rank": 2,
   "torsion": [],
   "points": [
    {
     "x": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0",
       "0",
       "0",
       "1"
      ],
      [
       "1"
      ]
     ],
     "height": "1/10",
     "generator": true
    },
    {
     "x": [
      [
       "0",
       "1"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "generator": true
    }
   ],
   "regulator": "1/10",
   "maps": {
    "coords": "normalized",
    "X": "(p^5+p^4-p^3*x-2*p^2*x-p^2*y-p*y+x^2)/(-p^4-p^3+p*x+p*y+y)",
    "Y": "(-p^3*x*y-p^2*x*y+x^2*y)/(p^8+2*p^7+p^6-2*p^5*x-2*p^5*y-2*p^4*x-3*p^4*y-p^3*y+p^2*x^2+2*p^2*x*y+p^2*y^2+p*x*y+p*y^2)",
    "Z": "(p^4+p^3-p*x)/y"
   }
  },
  {
   "id": 4,
   "letter": "a",
   "parameter": "a",
   "equation": "y^2 - (x-1)y/((1+a)a) = x(x - 1/(1+a))^2, scaled by u = a(1+a)",
   "a": {
    "a1": [
     "-1"
    ],
    "a3": [
     "0",
     "0",
     "1",
     "2",
     "1"
    ],
    "a2": [
     "0",
     "0",
     "-2",
     "-2"
    ],
    "a4": [
     "0",
     "0",
     "0",
     "0",
     "1",
     "2",
     "1"
    ]
   },
   "fibers": [
    {
     "type": "I8",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I1*",
     "place": "inf"
    },
    {
     "type": "I6",
     "place": [
      "1",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "1/16",
      "-1/8",
      "11/16",
      "1"
     ]
    }
   ],
   "reducible": [
    "D5",
    "A5",
    "A7"
   ],
   "rank": 1,
   "torsion": [],
   "raw_a": {
    "a1": [
     [
      "-1"
     ],
     [
      "0",
      "1",
      "1"
     ]
    ],
    "a3": [
     [
      "1"
     ],
     [
      "0",
      "1",
      "1"
     ]
    ],
    "a2": [
     [
      "-2"
     ],
     [
      "1",
      "1"
     ]
    ],
    "a4": [
     [
      "1"
     ],
     [
      "1",
      "2",
      "1"
     ]
    ]
   },
   "u": [
    "0",
    "1",
    "1"
   ],
   "points": [
    {
     "x": [
      [
       "0",
       "0",
       "1",
       "1"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "height": "1/24",
     "generator": true
    }
   ],
   "maps": {
    "coords": "raw",
    "X": "(p*x^2+x^2-x)/(p*y+y)",
    "Y": "(-p*y-y)/(p*x+x-1)",
    "Z": "(p^3*x^3-p^3*y^2+2*p^2*x^3-2*p^2*x^2+p^2*x*y-2*p^2*y^2+p*x^3-2*p*x^2+2*p*x*y+p*x-p*y^2-p*y+x*y-y)/(p^2*x*y+2*p*x*y-p*y+x*y-y)"
   }
  },
  {
   "id": 5,
   "letter": "d",
   "parameter": "d",
   "equation": "y^2 - 2d xy = x(x-d^2)(x-d(d+1)^2)",
   "a": {
    "a1": [
     "0",
     "-2"
    ],
    "a2": [
     "0",
     "-1",
     "-3",
     "-1"
    ],
    "a4": [
     "0",
     "0",
     "0",
     "1",
     "2",
     "1"
    ]
   },
   "fibers": [
    {
     "type": "I2*",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I2*",
     "place": "inf"
    },
    {
     "type": "I2",
     "place": [
      "-1",
      "1"
     ]
    },
    {
     "type": "I0*",
     "place": [
      "1",
      "1"
     ]
    }
   ],
   "reducible": [
    "A1",
    "D4",
    "D6",
    "D6"
   ],
   "rank": 1,
   "torsion": [
    2,
    2
   ],
   "points": [
    {
     "x": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "order": 2
    },
    {
     "x": [
      [
       "0",
       "1",
       "1"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0",
       "0",
       "1",
       "1"
      ],
      [
       "1"
      ]
     ],
     "order": 2
    },
    {
     "x": [
      [
       "0",
       "0",
       "1",
       "1"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0",
       "0",
       "0",
       "1",
       "1"
      ],
      [
       "1"
      ]
     ],
     "order": 2
    },
    {
     "x": [
      [
       "0",
       "0",
       "1"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "height": "1",
     "generator": true
    }
   ],
   "maps": {
    "coords": "normalized",
    "X": "(-p^4-p^3+p^2*x+p*x)/y",
    "Y": "y/(-p^3-p^2+p*x+x)",
    "Z": "(p^2*x-x^2)/(p*y)"
   }
  },
  {
   "id": 6,
   "letter": "p",
   "parameter": "p",
   "equation": "y^2 = x(x-p)(x-p(p+1)^2)",
   "a": {
    "a2": [
     "0",
     "-2",
     "-2",
     "-1"
    ],
    "a4": [
     "0",
     "0",
     "1",
     "2",
     "1"
    ]
   },
   "fibers": [
    {
     "type": "I2*",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I4*",
     "place": "inf"
    },
    {
     "type": "I2",
     "place": [
      "2",
      "1"
     ]
    },
    {
     "type": "I4",
     "place": [
      "1",
      "1"
     ]
    }
   ],
   "reducible": [
    "A1",
    "D6",
    "A3",
    "D8"
   ],
   "rank": 0,
   "torsion": [
    2,
    2
   ],
   "points": [
    {
     "x": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "order": 2
    },
    {
     "x": [
      [
       "0",
       "1"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "order": 2
    },
    {
     "x": [
      [
       "0",
       "1",
       "2",
       "1"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "order": 2
    }
   ]
  },
  {
   "id": 7,
   "letter": "w",
   "parameter": "w",
   "equation": "y^2 + w^2(x+1)y = x(x+1)(x+w^2)",
   "a": {
    "a1": [
     "0",
     "0",
     "1"
    ],
    "a3": [
     "0",
     "0",
     "1"
    ],
    "a2": [
     "1",
     "0",
     "1"
    ],
    "a4": [
     "0",
     "0",
     "1"
    ]
   },
   "fibers": [
    {
     "type": "I6",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I12",
     "place": "inf"
    },
    {
     "type": "I2",
     "place": [
      "-1",
      "1"
     ]
    },
    {
     "type": "I2",
     "place": [
      "1",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "8",
      "0",
      "1"
     ]
    }
   ],
   "reducible": [
    "A5",
    "A1",
    "A1",
    "A11"
   ],
   "rank": 0,
   "torsion": [
    6
   ],
   "points": [
    {
     "x": [
      [
       "0",
       "0",
       "-1"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "order": 6
    }
   ]
  },
  {
   "id": 8,
   "letter": "b",
   "parameter": "b",
   "equation": "y^2 + 2(b+1)xy + b^2(b+1)^2 y = x(x+b^2)(x-(b+1)^2)",
   "a": {
    "a1": [
     "2",
     "2"
    ],
    "a3": [
     "0",
     "0",
     "1",
     "2",
     "1"
    ],
    "a2": [
     "-1",
     "-2"
    ],
    "a4": [
     "0",
     "0",
     "-1",
     "-2",
     "-1"
    ]
   },
   "fibers": [
    {
     "type": "IV*",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "IV*",
     "place": "inf"
    },
    {
     "type": "I6",
     "place": [
      "1",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "1",
      "46/27",
      "1"
     ]
    }
   ],
   "reducible": [
    "A5",
    "E6",
    "E6"
   ],
   "rank": 1,
   "torsion": [
    3
   ],
   "points": [
    {
     "x": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "order": 3
    },
    {
     "x": [
      [
       "0",
       "0",
       "-1"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "height": "4/3",
     "generator": true
    }
   ],
   "maps": {
    "coords": "normalized",
    "X": "(p^5+2*p^4-p^3*x+p^3+p*y)/(-p^4-2*p^3-p^2-2*p*x+x^2-x-y)",
    "Y": "-y/(-p^3-2*p^2+p*x-p)",
    "Z": "(-p^4*y-2*p^3*y+p^2*x*y-p^2*y-y^2)/(p^7+4*p^6-p^5*x+6*p^5+4*p^4-p^3*x^2+4*p^3*x+p^3*y+p^3-4*p^2*x^2+4*p^2*x+2*p^2*y+p*x^3-2*p*x^2-p*x*y+p*x+p*y)"
   }
  },
  {
   "id": 9,
   "letter": "r",
   "parameter": "r",
   "equation": "y^2 + 2(r-1)xy = x(x-1)(x-r^3)",
   "a": {
    "a1": [
     "-2",
     "2"
    ],
    "a2": [
     "-1",
     "0",
     "0",
     "-1"
    ],
    "a4": [
     "0",
     "0",
     "0",
     "1"
    ]
   },
   "fibers": [
    {
     "type": "I2*",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I6*",
     "place": "inf"
    },
    {
     "type": "I2",
     "place": [
      "-1",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "4",
      "0",
      "1"
     ]
    }
   ],
   "reducible": [
    "D6",
    "A1",
    "D10"
   ],
   "rank": 1,
   "torsion": [
    2
   ],
   "points": [
    {
     "x": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "order": 2
    },
    {
     "x": [
      [
       "1"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "height": "1",
     "generator": true
    }
   ],
   "maps": {
    "coords": "normalized",
    "X": "(p^2*y-x*y)/(-p^4*x+p^3*x+p*x^2-x^2)",
    "Y": "(p^2*y-p*y)/(p^4-p^3*x-p*x+x^2)",
    "Z": "(-p^3*y+p*x*y)/(p^4*x-p^3*x^2-p*x^2+x^3)"
   }
  },
  {
   "id": 10,
   "letter": "e",
   "parameter": "e",
   "equation": "y^2 = x(x^2 - e^2(e-1)x + e^3(2e+1))",
   "a": {
    "a2": [
     "0",
     "0",
     "1",
     "-1"
    ],
    "a4": [
     "0",
     "0",
     "0",
     "1",
     "2"
    ]
   },
   "fibers": [
    {
     "type": "III*",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I4*",
     "place": "inf"
    },
    {
     "type": "I2",
     "place": [
      "1",
      "1"
     ]
    },
    {
     "type": "I2",
     "place": [
      "1/2",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "-4",
      "1"
     ]
    }
   ],
   "reducible": [
    "A1",
    "A1",
    "D8",
    "E7"
   ],
   "rank": 1,
   "torsion": [
    2
   ],
   "points": [
    {
     "x": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "order": 2
    },
    {
     "x": [
      [
       "0",
       "0",
       "0",
       "1"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0",
       "0",
       "0",
       "1",
       "1"
      ],
      [
       "1"
      ]
     ],
     "height": "1",
     "generator": true
    }
   ]
  },
  {
   "id": 11,
   "letter": "f",
   "parameter": "f",
   "equation": "y^2 - 2f xy - 2f^2(f-1)y = x^3 + f^4(f-1)^3",
   "a": {
    "a1": [
     "0",
     "-2"
    ],
    "a3": [
     "0",
     "0",
     "2",
     "-2"
    ],
    "a6": [
     "0",
     "0",
     "0",
     "0",
     "-1",
     "3",
     "-3",
     "1"
    ]
   },
   "fibers": [
    {
     "type": "III*",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "II*",
     "place": "inf"
    },
    {
     "type": "I4",
     "place": [
      "1",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "-32/27",
      "1"
     ]
    }
   ],
   "reducible": [
    "E7",
    "A3",
    "E8"
   ],
   "rank": 0,
   "torsion": []
  },
  {
   "id": 12,
   "letter": "g",
   "parameter": "g",
   "equation": "y^2 = x^3 + 4g^2 x^2 + g^3(g+1)^2 x",
   "a": {
    "a2": [
     "0",
     "0",
     "4"
    ],
    "a4": [
     "0",
     "0",
     "0",
     "1",
     "2",
     "1"
    ]
   },
   "fibers": [
    {
     "type": "III*",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "III*",
     "place": "inf"
    },
    {
     "type": "I4",
     "place": [
      "1",
      "1"
     ]
    },
    {
     "type": "I2",
     "place": [
      "-1",
      "1"
     ]
    }
   ],
   "reducible": [
    "E7",
    "E7",
    "A1",
    "A3"
   ],
   "rank": 0,
   "torsion": [
    2
   ],
   "points": [
    {
     "x": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "order": 2
    }
   ]
  },
  {
   "id": 13,
   "letter": "h",
   "parameter": "h",
   "equation": "y^2 = x^3 - 25/3 x - h - 1/h - 196/27, scaled by u = h",
   "a": {
    "a4": [
     "0",
     "0",
     "0",
     "0",
     "-25/3"
    ],
    "a6": [
     "0",
     "0",
     "0",
     "0",
     "0",
     "-1",
     "-196/27",
     "-1"
    ]
   },
   "fibers": [
    {
     "type": "II*",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "II*",
     "place": "inf"
    },
    {
     "type": "I2",
     "place": [
      "-1",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "1",
      "446/27",
      "1"
     ]
    }
   ],
   "reducible": [
    "A1",
    "E8",
    "E8"
   ],
   "rank": 1,
   "torsion": [],
   "raw_a": {
    "a4": [
     [
      "-25/3"
     ],
     [
      "1"
     ]
    ],
    "a6": [
     [
      "-1",
      "-196/27",
      "-1"
     ],
     [
      "0",
      "1"
     ]
    ]
   },
   "u": [
    "0",
    "1"
   ],
   "points": [
    {
     "x": [
      [
       "1/16",
       "1",
       "29/24",
       "1",
       "1/16"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "-1/64",
       "-3/8",
       "-125/64",
       "0",
       "125/64",
       "3/8",
       "1/64"
      ],
      [
       "1"
      ]
     ],
     "height": "4",
     "generator": true
    }
   ],
   "notes": "the printed fiber table uses h -> -h: with the printed equation the I2 sits at h = 1 and the I1 pair at the roots of 27h^2 + 446h + 27"
  },
  {
   "id": 14,
   "letter": "t",
   "parameter": "t",
   "equation": "y^2 = x^3 + t(t^2+4t+1)x^2 + t^4 x",
   "a": {
    "a2": [
     "0",
     "1",
     "4",
     "1"
    ],
    "a4": [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   },
   "fibers": [
    {
     "type": "I4*",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I4*",
     "place": "inf"
    },
    {
     "type": "I2",
     "place": [
      "1",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "1",
      "6",
      "1"
     ]
    }
   ],
   "reducible": [
    "A1",
    "D8",
    "D8"
   ],
   "rank": 1,
   "torsion": [
    2
   ],
   "points": [
    {
     "x": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "order": 2
    },
    {
     "x": [
      [
       "0",
       "0",
       "0",
       "-1"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0",
       "0",
       "0",
       "0",
       "2"
      ],
      [
       "1"
      ]
     ],
     "height": "1",
     "generator": true
    }
   ]
  },
  {
   "id": 15,
   "letter": "l",
   "parameter": "l",
   "equation": "y^2 - xy - 2l^3 y = (x+l^3)(x+l^2)(x-l+l^3)",
   "a": {
    "a1": [
     "-1"
    ],
    "a3": [
     "0",
     "0",
     "0",
     "-2"
    ],
    "a2": [
     "0",
     "-1",
     "1",
     "2"
    ],
    "a4": [
     "0",
     "0",
     "0",
     "-1",
     "-1",
     "2",
     "1"
    ],
    "a6": [
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "-1",
     "0",
     "1"
    ]
   },
   "fibers": [
    {
     "type": "I10",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I3*",
     "place": "inf"
    },
    {
     "type": "I1",
     "place": [
      "-1/8",
      "3/4",
      "-23/16",
      "-3/2",
      "-2",
      "1"
     ]
    }
   ],
   "reducible": [
    "A9",
    "D7"
   ],
   "rank": 2,
   "torsion": [],
   "points": [
    {
     "x": [
      [
       "0",
       "0",
       "0",
       "-1"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "generator": true
    },
    {
     "x": [
      [
       "0",
       "0",
       "-1"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "generator": true
    }
   ],
   "regulator": "1/5"
  },
  {
   "id": 16,
   "letter": "o",
   "parameter": "o",
   "equation": "y^2 = x^3 + (o^3 - 5o^2 + 2)x^2 + x",
   "a": {
    "a2": [
     "2",
     "0",
     "-5",
     "1"
    ],
    "a4": [
     "1"
    ]
   },
   "fibers": [
    {
     "type": "I2",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I12*",
     "place": "inf"
    },
    {
     "type": "I1",
     "place": [
      "-1",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "-5",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "-4",
      "-4",
      "1"
     ]
    }
   ],
   "reducible": [
    "A1",
    "D16"
   ],
   "rank": 1,
   "torsion": [
    2
   ],
   "points": [
    {
     "x": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "order": 2
    },
    {
     "x": [
      [
       "4",
       "-6",
       "13/4",
       "-3/4",
       "1/16"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "-10",
       "39/2",
       "-51/4",
       "23/8",
       "3/16",
       "-5/32",
       "1/64"
      ],
      [
       "1"
      ]
     ],
     "height": "4",
     "generator": true
    }
   ]
  },
  {
   "id": 17,
   "letter": "q",
   "parameter": "q",
   "equation": "y^2 = x^3 + (q^3+q^2+2q-2)x^2 + (1-2q)x",
   "a": {
    "a2": [
     "-2",
     "2",
     "1",
     "1"
    ],
    "a4": [
     "1",
     "-2"
    ]
   },
   "fibers": [
    {
     "type": "I4",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I10*",
     "place": "inf"
    },
    {
     "type": "I2",
     "place": [
      "-1/2",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "5",
      "2",
      "1"
     ]
    }
   ],
   "reducible": [
    "A3",
    "A1",
    "D14"
   ],
   "rank": 0,
   "torsion": [
    2
   ],
   "points": [
    {
     "x": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "order": 2
    }
   ]
  },
  {
   "id": 18,
   "letter": "m",
   "parameter": "m",
   "equation": "y^2 + (m-2)(m+2)xy = x(x-1)^2",
   "a": {
    "a1": [
     "-4",
     "0",
     "1"
    ],
    "a2": [
     "-2"
    ],
    "a4": [
     "1"
    ]
   },
   "fibers": [
    {
     "type": "I2",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I16",
     "place": "inf"
    },
    {
     "type": "I2",
     "place": [
      "-2",
      "1"
     ]
    },
    {
     "type": "I2",
     "place": [
      "2",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "-8",
      "0",
      "1"
     ]
    }
   ],
   "reducible": [
    "A1",
    "A1",
    "A1",
    "A15"
   ],
   "rank": 0,
   "torsion": [
    4
   ],
   "points": [
    {
     "x": [
      [
       "1"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "order": 4
    }
   ]
  },
  {
   "id": 19,
   "letter": "n",
   "parameter": "n",
   "equation": "y^2 + (n^2-1)xy - y = x^3 - 2x^2",
   "a": {
    "a1": [
     "-1",
     "0",
     "1"
    ],
    "a2": [
     "-2"
    ],
    "a3": [
     "-1"
    ]
   },
   "fibers": [
    {
     "type": "I2",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I16",
     "place": "inf"
    },
    {
     "type": "I1",
     "place": [
      "125/2",
      "0",
      "-17/2",
      "0",
      "-9/2",
      "0",
      "1"
     ]
    }
   ],
   "reducible": [
    "A1",
    "A15"
   ],
   "rank": 2,
   "torsion": [],
   "points": [
    {
     "x": [
      [
       "1",
       "1"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "1"
      ],
      [
       "1"
      ]
     ],
     "height": "17/16",
     "generator": true
    },
    {
     "x": [
      [
       "1",
       "-1"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "1"
      ],
      [
       "1"
      ]
     ],
     "height": "17/16",
     "generator": true
    }
   ],
   "regulator": "1/4",
   "paper_regulator": "3/8",
   "notes": "the printed points (1 +- t, 0) are not on the curve; the sections are (1 +- n, 1). The printed regulator 3/8 omits the I2 correction at n = 0 (both sections pass through the node (1,1)); the discriminant identity forces 1/4"
  },
  {
   "id": 20,
   "letter": "j",
   "parameter": "j",
   "equation": "y^2 - (j^2+4j)xy + j^2 y = x^3",
   "a": {
    "a1": [
     "0",
     "-4",
     "-1"
    ],
    "a3": [
     "0",
     "0",
     "1"
    ]
   },
   "fibers": [
    {
     "type": "IV*",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I12",
     "place": "inf"
    },
    {
     "type": "I2",
     "place": [
      "1",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "27",
      "10",
      "1"
     ]
    }
   ],
   "reducible": [
    "A11",
    "E6",
    "A1"
   ],
   "rank": 0,
   "torsion": [
    3
   ],
   "points": [
    {
     "x": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "order": 3
    }
   ]
  },
  {
   "id": 21,
   "letter": "c",
   "parameter": "c",
   "equation": "y^2 + (c^2+5)xy + y = x^3",
   "a": {
    "a1": [
     "5",
     "0",
     "1"
    ],
    "a3": [
     "1"
    ]
   },
   "fibers": [
    {
     "type": "I18",
     "place": "inf"
    },
    {
     "type": "I1",
     "place": [
      "2",
      "0",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "7",
      "1",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "7",
      "-1",
      "1"
     ]
    }
   ],
   "reducible": [
    "A17"
   ],
   "rank": 1,
   "torsion": [
    3
   ],
   "points": [
    {
     "x": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "order": 3
    },
    {
     "x": [
      [
       "-1/4",
       "0",
       "-1/4",
       "0",
       "-1/4"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "1/8",
       "-3/8",
       "3/4",
       "-7/8",
       "3/4",
       "-3/8",
       "1/8"
      ],
      [
       "1"
      ]
     ],
     "height": "4",
     "generator": true
    }
   ]
  },
  {
   "id": 22,
   "letter": "u",
   "parameter": "u",
   "equation": "y^2 = x^3 + u(u^2+4u+2)x^2 + u^2 x",
   "a": {
    "a2": [
     "0",
     "2",
     "4",
     "1"
    ],
    "a4": [
     "0",
     "0",
     "1"
    ]
   },
   "fibers": [
    {
     "type": "I1*",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I8*",
     "place": "inf"
    },
    {
     "type": "I2",
     "place": [
      "2",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "4",
      "1"
     ]
    }
   ],
   "reducible": [
    "A1",
    "D5",
    "D12"
   ],
   "rank": 0,
   "torsion": [
    2
   ],
   "points": [
    {
     "x": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "order": 2
    }
   ]
  },
  {
   "id": 23,
   "letter": "i",
   "parameter": "i",
   "equation": "y^2 = x^3 + (i^3+4i^2+2i)x^2 + (-2i^2-8i-2)x + i + 4",
   "a": {
    "a2": [
     "0",
     "2",
     "4",
     "1"
    ],
    "a4": [
     "-2",
     "-8",
     "-2"
    ],
    "a6": [
     "4",
     "1"
    ]
   },
   "fibers": [
    {
     "type": "I13*",
     "place": "inf"
    },
    {
     "type": "I2",
     "place": [
      "5/2",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "4",
      "-2",
      "11/4",
      "1"
     ]
    }
   ],
   "reducible": [
    "A1",
    "D17"
   ],
   "rank": 0,
   "torsion": []
  },
  {
   "id": 24,
   "letter": "psi",
   "parameter": "psi",
   "equation": "y^2 = x^3 - 5x^2 psi^2 - psi x^2 - psi^5 x",
   "a": {
    "a2": [
     "0",
     "-1",
     "-5"
    ],
    "a4": [
     "0",
     "0",
     "0",
     "0",
     "0",
     "-1"
    ]
   },
   "fibers": [
    {
     "type": "I6*",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "III*",
     "place": "inf"
    },
    {
     "type": "I1",
     "place": [
      "1/4",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "1",
      "6",
      "1"
     ]
    }
   ],
   "reducible": [
    "E7",
    "D10"
   ],
   "rank": 1,
   "torsion": [
    2
   ],
   "points": [
    {
     "x": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "order": 2
    },
    {
     "x": [
      [
       "1/4",
       "3/2",
       "11/4",
       "3/2",
       "1/4"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "1/8",
       "7/8",
       "3/2",
       "-5/8",
       "-5/2",
       "-9/8",
       "-1/8"
      ],
      [
       "1"
      ]
     ],
     "height": "4",
     "generator": true
    }
   ],
   "notes": "the section's fiber table prints I6* at infinity and III* at psi = -5/2, but the printed equation has its discriminant 16 psi^12 (4psi+1)(psi^2+6psi+1): I6* at 0, III* at infinity; the fiber multiset matches the summary table either way"
  },
  {
   "id": 25,
   "letter": "delta",
   "parameter": "delta",
   "equation": "y^2 = x^3 + delta(1+4delta)x^2 + 2delta^4 x + delta^7",
   "a": {
    "a2": [
     "0",
     "1",
     "4"
    ],
    "a4": [
     "0",
     "0",
     "0",
     "0",
     "2"
    ],
    "a6": [
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   },
   "fibers": [
    {
     "type": "I5*",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "II*",
     "place": "inf"
    },
    {
     "type": "I2",
     "place": [
      "2",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "4/27",
      "1"
     ]
    }
   ],
   "reducible": [
    "E8",
    "A1",
    "D9"
   ],
   "rank": 0,
   "torsion": [],
   "notes": "the summary table prints 2I1 (Euler total 25); the section table's single I1 at delta = -4/27 is what the equation yields"
  },
  {
   "id": 26,
   "letter": "pi",
   "parameter": "pi",
   "equation": "y^2 = x^3 + pi(pi^2-2pi-2)x^2 + pi^2(2pi+1)x",
   "a": {
    "a2": [
     "0",
     "-2",
     "-2",
     "1"
    ],
    "a4": [
     "0",
     "0",
     "1",
     "2"
    ]
   },
   "fibers": [
    {
     "type": "I3*",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I6*",
     "place": "inf"
    },
    {
     "type": "I2",
     "place": [
      "1/2",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "-4",
      "1"
     ]
    }
   ],
   "reducible": [
    "A1",
    "D10",
    "D7"
   ],
   "rank": 0,
   "torsion": [
    2
   ],
   "points": [
    {
     "x": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "order": 2
    }
   ]
  },
  {
   "id": 27,
   "letter": "mu",
   "parameter": "mu",
   "equation": "y^2 + mu^2(x-1)y = x(x-mu^2)^2",
   "a": {
    "a1": [
     "0",
     "0",
     "1"
    ],
    "a3": [
     "0",
     "0",
     "-1"
    ],
    "a2": [
     "0",
     "0",
     "-2"
    ],
    "a4": [
     "0",
     "0",
     "0",
     "0",
     "1"
    ]
   },
   "fibers": [
    {
     "type": "IV*",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I10",
     "place": "inf"
    },
    {
     "type": "I2",
     "place": [
      "-1",
      "1"
     ]
    },
    {
     "type": "I2",
     "place": [
      "1",
      "1"
     ]
    },
    {
     "type": "I1",
     "place": [
      "-27/2",
      "0",
      "1"
     ]
    }
   ],
   "reducible": [
    "A9",
    "A1",
    "A1",
    "E6"
   ],
   "rank": 1,
   "torsion": [],
   "points": [
    {
     "x": [
      [
       "0",
       "0",
       "1"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "height": "1/15",
     "generator": true
    }
   ]
  },
  {
   "id": 28,
   "letter": "alpha",
   "parameter": "alpha",
   "equation": "y^2 + (alpha^2+2)xy - alpha^2 y = x^2(x-1)",
   "a": {
    "a1": [
     "2",
     "0",
     "1"
    ],
    "a2": [
     "-1"
    ],
    "a3": [
     "0",
     "0",
     "-1"
    ]
   },
   "fibers": [
    {
     "type": "I0*",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I14",
     "place": "inf"
    },
    {
     "type": "I1",
     "place": [
      "32",
      "0",
      "13/2",
      "0",
      "1"
     ]
    }
   ],
   "reducible": [
    "D4",
    "A13"
   ],
   "rank": 1,
   "torsion": [],
   "points": [
    {
     "x": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "height": "1/7",
     "generator": true
    }
   ],
   "notes": "the right side x^2(x-1) is the cubic x^3 - x^2; the equation is a Weierstrass model as printed"
  },
  {
   "id": 29,
   "letter": "beta",
   "parameter": "beta",
   "equation": "y^2 = x^3 + 2beta^2(beta-1)x^2 + beta^3(beta-1)^2 x",
   "a": {
    "a2": [
     "0",
     "0",
     "-2",
     "2"
    ],
    "a4": [
     "0",
     "0",
     "0",
     "1",
     "-2",
     "1"
    ]
   },
   "fibers": [
    {
     "type": "III*",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I2*",
     "place": "inf"
    },
    {
     "type": "I1*",
     "place": [
      "-1",
      "1"
     ]
    }
   ],
   "reducible": [
    "E7",
    "D6",
    "D5"
   ],
   "rank": 0,
   "torsion": [
    2
   ],
   "points": [
    {
     "x": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "y": [
      [
       "0"
      ],
      [
       "1"
      ]
     ],
     "order": 2
    }
   ]
  },
  {
   "id": 30,
   "letter": "phi",
   "parameter": "phi",
   "equation": "y^2 = x^3 + 2phi^2(4phi-7)x^2 - 4phi^3(8phi^2-3phi-4)x + 8(3+4phi)phi^6",
   "a": {
    "a2": [
     "0",
     "0",
     "-14",
     "8"
    ],
    "a4": [
     "0",
     "0",
     "0",
     "16",
     "12",
     "-32"
    ],
    "a6": [
     "0",
     "0",
     "0",
     "0",
     "0",
     "0",
     "24",
     "32"
    ]
   },
   "fibers": [
    {
     "type": "III*",
     "place": [
      "0",
      "1"
     ]
    },
    {
     "type": "I7*",
     "place": "inf"
    },
    {
     "type": "I1",
     "place": [
      "2",
      "-13/8",
      "1"
     ]
    }
   ],
   "reducible": [
    "E7",
    "D11"
   ],
   "rank": 0,
   "torsion": []
  }
 ]
})k3fib";
  return text;
}

}  // namespace k3fib
