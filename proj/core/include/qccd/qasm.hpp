#pragma once

#include <stdexcept>
#include <string>

#include "qccd/ir.hpp"

namespace qccd {

struct QasmError : std::runtime_error {
    int line;
    int col;
    QasmError(int line_, int col_, const std::string& msg)
        : std::runtime_error("qasm:" + std::to_string(line_) + ":" +
                             std::to_string(col_) + ": " + msg),
          line(line_),
          col(col_) {}
};

// OpenQASM 2.0 subset: single qreg; 1q gates h,x,y,z,s,t,sdg,tdg,rx,ry,rz,
// u1,u2,u3 (angles parsed and ignored); 2q gates cx,cz,ms (one TwoQubit op
// each) and swap (expands to 3 TwoQubit ops); measure. No classical control.
Circuit parse_qasm(const std::string& text);

}  // namespace qccd
