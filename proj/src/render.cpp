#include "nicegen/render.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <utility>

#include "nicegen/errors.hpp"

namespace nicegen {

namespace {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------- JSON out

ordered_json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

ordered_json rational_to_json(const Rational& r) {
    if (r.is_integer()) return int_to_json(r.num());
    return r.to_string();
}

ordered_json matrix_to_json(const ExactMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json trace_to_json(const RowOpTrace& trace) {
    ordered_json steps = ordered_json::array();
    for (const RowOp& op : trace.steps) {
        ordered_json s;
        switch (op.kind) {
            case RowOp::Kind::swap:
                s["op"] = "swap";
                s["i"] = op.i;
                s["j"] = op.j;
                break;
            case RowOp::Kind::scale:
                s["op"] = "scale";
                s["i"] = op.i;
                s["c"] = rational_to_json(op.c);
                break;
            case RowOp::Kind::add_multiple:
                s["op"] = "add_multiple";
                s["i"] = op.i;
                s["j"] = op.j;
                s["c"] = rational_to_json(op.c);
                break;
        }
        steps.push_back(std::move(s));
    }
    return steps;
}

ordered_json dependence_to_json(const std::vector<std::vector<std::int64_t>>& dependence) {
    ordered_json combos = ordered_json::array();
    for (const auto& combo : dependence) combos.push_back(combo);
    return combos;
}

ordered_json config_to_json(const GenConfig& c) {
    ordered_json j;
    j["n"] = c.n;
    j["seed"] = c.seed;
    j["max_coeff"] = c.max_coeff;
    if (c.rank) j["rank"] = *c.rank;
    j["rational_mode"] = c.rational_mode;
    if (c.dependence) j["dependence"] = *c.dependence;
    j["max_retries"] = c.max_retries;
    return j;
}

ordered_json payload_to_json(const ProblemBundle& bundle) {
    ordered_json j;
    if (const auto* lu = std::get_if<LUProblem>(&bundle.payload)) {
        j["L"] = matrix_to_json(lu->pair.L);
        j["U"] = matrix_to_json(lu->pair.U);
        j["A"] = matrix_to_json(lu->pair.product);
        j["rank"] = lu->rank;
        if (!lu->dependence.empty()) j["dependence"] = dependence_to_json(lu->dependence);
    } else if (const auto* inv = std::get_if<InverseProblem>(&bundle.payload)) {
        j["L"] = matrix_to_json(inv->pair.L);
        j["U"] = matrix_to_json(inv->pair.U);
        j["A"] = matrix_to_json(inv->pair.product);
        j["inverse"] = matrix_to_json(inv->inverse);
        j["trace"] = trace_to_json(inv->trace);
    } else if (const auto* qr = std::get_if<QRTriple>(&bundle.payload)) {
        j["v"] = matrix_to_json(qr->v);
        j["c"] = int_to_json(qr->c);
        j["L"] = matrix_to_json(qr->L);
        j["U"] = matrix_to_json(qr->U);
        j["Q"] = matrix_to_json(qr->Q);
        j["R"] = matrix_to_json(qr->R);
        j["A"] = matrix_to_json(qr->A);
    } else if (const auto* sys = std::get_if<LinearSystemProblem>(&bundle.payload)) {
        j["A"] = matrix_to_json(sys->A);
        j["b"] = matrix_to_json(sys->b);
        j["x"] = matrix_to_json(sys->x);
        if (!sys->dependence.empty()) j["dependence"] = dependence_to_json(sys->dependence);
        if (sys->y) j["y"] = matrix_to_json(*sys->y);
        j["rref_augmented"] = matrix_to_json(sys->rref_augmented);
        j["trace"] = trace_to_json(sys->trace);
    }
    return j;
}

// ----------------------------------------------------------------- JSON in

[[noreturn]] void schema_error(const std::string& message) {
    throw parse_error("schema: " + message, 0);
}

Int int_from_json(const ordered_json& j, const char* what) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::runtime_error&) {
        }
    }
    schema_error(std::string(what) + ": expected an integer");
}

Rational rational_from_json(const ordered_json& j, const char* what) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const std::size_t slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(Int(s));
            return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        } catch (const division_by_zero&) {
            schema_error(std::string(what) + ": zero denominator");
        } catch (const std::runtime_error&) {
            schema_error(std::string(what) + ": bad rational literal '" + s + "'");
        }
    }
    return Rational(int_from_json(j, what));
}

ExactMatrix matrix_from_json(const ordered_json& j, const char* what) {
    if (!j.is_array() || j.empty() || !j.front().is_array() || j.front().empty())
        schema_error(std::string(what) + ": expected an array of row arrays");
    const std::size_t rows = j.size();
    const std::size_t cols = j.front().size();
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            schema_error(std::string(what) + ": ragged rows");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k], what);
    }
    return m;
}

const ordered_json& field(const ordered_json& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end()) schema_error(std::string("missing field '") + name + "'");
    return *it;
}

// Shape requirements are enforced here so that the verifier can run row
// operations safely; value-level invariants are the verifier's job and must
// surface as failed checks, not parse errors.
void require_shape(const ExactMatrix& m, std::size_t rows, std::size_t cols, const char* what) {
    if (m.rows() != rows || m.cols() != cols)
        schema_error(std::string(what) + ": expected a " + std::to_string(rows) + "x" +
                     std::to_string(cols) + " matrix");
}

RowOpTrace trace_from_json(const ordered_json& j) {
    if (!j.is_array()) schema_error("trace: expected an array of steps");
    RowOpTrace trace;
    for (const ordered_json& s : j) {
        const std::string op = field(s, "op").get<std::string>();
        if (op == "swap") {
            trace.steps.push_back(RowOp::swap(field(s, "i").get<std::size_t>(),
                                              field(s, "j").get<std::size_t>()));
        } else if (op == "scale") {
            trace.steps.push_back(RowOp::scale(field(s, "i").get<std::size_t>(),
                                               rational_from_json(field(s, "c"), "trace")));
        } else if (op == "add_multiple") {
            trace.steps.push_back(RowOp::add_multiple(field(s, "i").get<std::size_t>(),
                                                      field(s, "j").get<std::size_t>(),
                                                      rational_from_json(field(s, "c"), "trace")));
        } else {
            schema_error("trace: unknown op '" + op + "'");
        }
    }
    return trace;
}

void require_trace_rows(const RowOpTrace& trace, std::size_t rows) {
    for (const RowOp& op : trace.steps)
        if (op.i >= rows || (op.kind != RowOp::Kind::scale && op.j >= rows))
            schema_error("trace: row index out of range");
}

std::vector<std::vector<std::int64_t>> dependence_from_json(const ordered_json& j) {
    if (!j.is_array()) schema_error("dependence: expected an array of arrays");
    std::vector<std::vector<std::int64_t>> combos;
    for (const ordered_json& row : j) {
        if (!row.is_array()) schema_error("dependence: expected an array of arrays");
        combos.push_back(row.get<std::vector<std::int64_t>>());
    }
    return combos;
}

GenConfig config_from_json(const ordered_json& j) {
    if (!j.is_object()) schema_error("config: expected an object");
    GenConfig c;
    c.n = field(j, "n").get<std::size_t>();
    c.seed = field(j, "seed").get<std::uint64_t>();
    c.max_coeff = field(j, "max_coeff").get<std::int64_t>();
    if (j.contains("rank")) c.rank = j["rank"].get<std::size_t>();
    c.rational_mode = field(j, "rational_mode").get<bool>();
    if (j.contains("dependence")) c.dependence = j["dependence"].get<std::vector<std::int64_t>>();
    c.max_retries = field(j, "max_retries").get<unsigned>();
    return c;
}

ProblemBundle payload_from_json(ProblemKind kind, const ordered_json& j) {
    ProblemBundle bundle;
    bundle.kind = kind;
    switch (kind) {
        case ProblemKind::lu_full:
        case ProblemKind::lu_deficient: {
            LUProblem p{{matrix_from_json(field(j, "L"), "L"),
                         matrix_from_json(field(j, "U"), "U"),
                         matrix_from_json(field(j, "A"), "A")},
                        field(j, "rank").get<std::size_t>(),
                        {}};
            const std::size_t n = p.pair.L.rows();
            require_shape(p.pair.L, n, n, "L");
            require_shape(p.pair.U, n, n, "U");
            require_shape(p.pair.product, n, n, "A");
            if (j.contains("dependence")) p.dependence = dependence_from_json(j["dependence"]);
            bundle.payload = std::move(p);
            break;
        }
        case ProblemKind::unimodular_inverse: {
            InverseProblem p{{matrix_from_json(field(j, "L"), "L"),
                              matrix_from_json(field(j, "U"), "U"),
                              matrix_from_json(field(j, "A"), "A")},
                             matrix_from_json(field(j, "inverse"), "inverse"),
                             trace_from_json(field(j, "trace"))};
            const std::size_t n = p.pair.L.rows();
            require_shape(p.pair.L, n, n, "L");
            require_shape(p.pair.U, n, n, "U");
            require_shape(p.pair.product, n, n, "A");
            require_shape(p.inverse, n, n, "inverse");
            require_trace_rows(p.trace, n);
            bundle.payload = std::move(p);
            break;
        }
        case ProblemKind::qr: {
            QRTriple t{matrix_from_json(field(j, "A"), "A"),
                       matrix_from_json(field(j, "Q"), "Q"),
                       matrix_from_json(field(j, "R"), "R"),
                       matrix_from_json(field(j, "v"), "v"),
                       int_from_json(field(j, "c"), "c"),
                       matrix_from_json(field(j, "L"), "L"),
                       matrix_from_json(field(j, "U"), "U")};
            const std::size_t n = t.A.rows();
            require_shape(t.A, n, n, "A");
            require_shape(t.Q, n, n, "Q");
            require_shape(t.R, n, n, "R");
            require_shape(t.L, n, n, "L");
            require_shape(t.U, n, n, "U");
            require_shape(t.v, n, 1, "v");
            bundle.payload = std::move(t);
            break;
        }
        case ProblemKind::system_unique:
        case ProblemKind::system_infinite:
        case ProblemKind::system_inconsistent: {
            LinearSystemProblem p{matrix_from_json(field(j, "A"), "A"),
                                  matrix_from_json(field(j, "b"), "b"),
                                  kind == ProblemKind::system_unique ? SystemKind::unique
                                  : kind == ProblemKind::system_infinite
                                      ? SystemKind::infinite
                                      : SystemKind::inconsistent,
                                  matrix_from_json(field(j, "x"), "x"),
                                  {},
                                  std::nullopt,
                                  matrix_from_json(field(j, "rref_augmented"), "rref_augmented"),
                                  trace_from_json(field(j, "trace"))};
            const std::size_t n = p.A.rows();
            require_shape(p.A, n, n, "A");
            require_shape(p.b, n, 1, "b");
            require_shape(p.x, n, 1, "x");
            require_shape(p.rref_augmented, n, n + 1, "rref_augmented");
            require_trace_rows(p.trace, n);
            if (j.contains("dependence")) p.dependence = dependence_from_json(j["dependence"]);
            if (j.contains("y")) {
                p.y = matrix_from_json(j["y"], "y");
                require_shape(*p.y, n, 1, "y");
            }
            bundle.payload = std::move(p);
            break;
        }
    }
    return bundle;
}

// --------------------------------------------------------------- LaTeX out

std::string latex_rational(const Rational& r) {
    if (r.is_integer()) return r.num().str();
    const Int num = r.num() < 0 ? Int(-r.num()) : r.num();
    std::string s = r.is_negative() ? "-" : "";
    return s + "\\frac{" + num.str() + "}{" + r.den().str() + "}";
}

std::string latex_matrix(const ExactMatrix& m) {
    std::string out = "\\begin{bmatrix}\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out += latex_rational(m(i, j));
            if (j + 1 < m.cols()) out += " & ";
        }
        out += i + 1 < m.rows() ? " \\\\\n" : "\n";
    }
    return out + "\\end{bmatrix}";
}

// [A | last column] with a vertical rule; aug_cols columns on the left.
std::string latex_augmented(const ExactMatrix& m, std::size_t aug_cols) {
    std::string spec(aug_cols, 'c');
    spec += "|";
    spec += std::string(m.cols() - aug_cols, 'c');
    std::string out = "\\left[\\begin{array}{" + spec + "}\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out += latex_rational(m(i, j));
            if (j + 1 < m.cols()) out += " & ";
        }
        out += i + 1 < m.rows() ? " \\\\\n" : "\n";
    }
    return out + "\\end{array}\\right]";
}

std::string latex_reduction_chain(const ExactMatrix& initial, const RowOpTrace& trace,
                                  std::size_t aug_cols, bool full_chain) {
    std::string out = "\\begin{align*}\n&" + latex_augmented(initial, aug_cols);
    if (full_chain) {
        for (const ExactMatrix& state : replay_snapshots(initial, trace))
            out += "\\\\\n&\\sim " + latex_augmented(state, aug_cols);
    } else {
        out += "\n\\sim \\cdots \\sim " + latex_augmented(replay(initial, trace), aug_cols);
    }
    return out + "\n\\end{align*}\n";
}

std::string latex_dependence_line(const std::vector<std::vector<std::int64_t>>& dependence,
                                  std::size_t rank) {
    std::string out;
    for (std::size_t t = 0; t < dependence.size(); ++t) {
        out += "\\[\n\\mathbf{v}_{" + std::to_string(rank + t + 1) + "} = ";
        for (std::size_t i = 0; i < dependence[t].size(); ++i) {
            const std::int64_t k = dependence[t][i];
            if (i > 0) out += k < 0 ? " - " : " + ";
            else if (k < 0) out += "-";
            const std::int64_t mag = k < 0 ? -k : k;
            if (mag != 1) out += std::to_string(mag) + "\\,";
            out += "\\mathbf{v}_{" + std::to_string(i + 1) + "}";
        }
        out += "\n\\]\n";
    }
    return out;
}

std::string latex_body(const ProblemBundle& bundle, const RenderOptions& opt) {
    std::ostringstream out;
    if (const auto* lu = std::get_if<LUProblem>(&bundle.payload)) {
        if (bundle.kind == ProblemKind::lu_full) {
            out << "Find an LU factorization of\n\\[\nA = " << latex_matrix(lu->pair.product)
                << ".\n\\]\n";
            if (opt.show_solution) {
                out << "\\paragraph{Solution.}\n\\[\nA = LU = " << latex_matrix(lu->pair.L)
                    << "\n" << latex_matrix(lu->pair.U) << ".\n\\]\n";
            }
        } else {
            out << "Determine the rank of\n\\[\nA = " << latex_matrix(lu->pair.product)
                << "\n\\]\nand express each dependent column as a combination of the"
                   " independent ones.\n";
            if (opt.show_solution) {
                const RrefResult red = rref_with_trace(lu->pair.product);
                out << "\\paragraph{Solution.}\nThe rank is " << lu->rank << ":\n";
                if (opt.show_trace)
                    out << latex_reduction_chain(lu->pair.product, red.trace, lu->pair.product.cols(),
                                                 true);
                else
                    out << "\\[\nA \\sim " << latex_matrix(red.rref) << ".\n\\]\n";
                out << latex_dependence_line(lu->dependence, lu->rank);
            }
        }
    } else if (const auto* inv = std::get_if<InverseProblem>(&bundle.payload)) {
        out << "Find the inverse of\n\\[\nA = " << latex_matrix(inv->pair.product)
            << "\n\\]\nby row reducing $[A \\,|\\, I]$.\n";
        if (opt.show_solution) {
            const std::size_t n = inv->pair.product.rows();
            out << "\\paragraph{Solution.}\n"
                << latex_reduction_chain(hconcat(inv->pair.product, ExactMatrix::identity(n)),
                                         inv->trace, n, opt.show_trace)
                << "\\[\nA^{-1} = " << latex_matrix(inv->inverse) << ".\n\\]\n";
        }
    } else if (const auto* qr = std::get_if<QRTriple>(&bundle.payload)) {
        out << "Find a QR factorization (orthogonal $Q$, upper-triangular $R$) of\n\\[\nA = "
            << latex_matrix(qr->A) << ".\n\\]\n";
        if (opt.show_solution) {
            out << "\\paragraph{Solution.}\n\\[\nQ = " << latex_matrix(qr->Q)
                << ", \\qquad R = " << latex_matrix(qr->R) << ".\n\\]\n";
        }
    } else if (const auto* sys = std::get_if<LinearSystemProblem>(&bundle.payload)) {
        const std::size_t n = sys->A.rows();
        out << "Solve $A\\mathbf{x} = \\mathbf{b}$ given by the augmented matrix\n\\[\n"
            << latex_augmented(hconcat(sys->A, sys->b), n) << ".\n\\]\n";
        if (opt.show_solution) {
            out << "\\paragraph{Solution.}\n"
                << latex_reduction_chain(hconcat(sys->A, sys->b), sys->trace, n, opt.show_trace);
            switch (sys->kind) {
                case SystemKind::unique:
                    out << "The system has the unique solution\n\\[\n\\mathbf{x} = "
                        << latex_matrix(sys->x) << ".\n\\]\n";
                    break;
                case SystemKind::infinite:
                    out << "The system has infinitely many solutions; one of them is\n\\[\n"
                           "\\mathbf{x} = "
                        << latex_matrix(sys->x) << ",\n\\]\nand the columns satisfy\n"
                        << latex_dependence_line(sys->dependence, n - sys->dependence.size());
                    break;
                case SystemKind::inconsistent:
                    out << "The last row of the reduced form reads $0 = 1$, so the system has"
                           " no solution.\n";
                    break;
            }
        }
    }
    return out.str();
}

// ---------------------------------------------------------------- text out

std::string text_grid(const ExactMatrix& m, std::size_t aug_col = SIZE_MAX) {
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            width[j] = std::max(width[j], m(i, j).to_string().size());
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j == aug_col) out += " |";
            const std::string s = m(i, j).to_string();
            out += " " + std::string(width[j] - s.size(), ' ') + s;
        }
        out += " ]\n";
    }
    return out;
}

std::string text_dependence(const std::vector<std::vector<std::int64_t>>& dependence,
                            std::size_t rank) {
    std::string out;
    for (std::size_t t = 0; t < dependence.size(); ++t) {
        out += "col_" + std::to_string(rank + t + 1) + " =";
        for (std::size_t i = 0; i < dependence[t].size(); ++i) {
            out += (i > 0 ? " + " : " ") + std::to_string(dependence[t][i]) + "*col_" +
                   std::to_string(i + 1);
        }
        out += "\n";
    }
    return out;
}

std::string text_reduction(const ExactMatrix& initial, const RowOpTrace& trace,
                           std::size_t aug_col, bool full_chain) {
    std::string out = text_grid(initial, aug_col);
    if (full_chain) {
        for (const ExactMatrix& state : replay_snapshots(initial, trace))
            out += "~\n" + text_grid(state, aug_col);
    } else {
        out += "~ ... ~\n" + text_grid(replay(initial, trace), aug_col);
    }
    return out;
}

std::string text_body(const ProblemBundle& bundle, const RenderOptions& opt) {
    std::ostringstream out;
    out << "problem: " << to_string(bundle.kind) << "\n";
    out << "seed: " << bundle.seed << "\n\n";
    if (const auto* lu = std::get_if<LUProblem>(&bundle.payload)) {
        out << "A =\n" << text_grid(lu->pair.product);
        if (bundle.kind == ProblemKind::lu_full)
            out << "\nTask: find an LU factorization of A.\n";
        else
            out << "\nTask: determine the rank of A and the column dependence.\n";
        if (opt.show_solution) {
            out << "\nSolution:\nL =\n" << text_grid(lu->pair.L) << "U =\n"
                << text_grid(lu->pair.U);
            if (bundle.kind == ProblemKind::lu_deficient) {
                out << "rank = " << lu->rank << "\n" << text_dependence(lu->dependence, lu->rank);
                if (opt.show_trace)
                    out << "\nrow reduction of A:\n"
                        << text_reduction(lu->pair.product,
                                          rref_with_trace(lu->pair.product).trace,
                                          SIZE_MAX, true);
            }
        }
    } else if (const auto* inv = std::get_if<InverseProblem>(&bundle.payload)) {
        out << "A =\n" << text_grid(inv->pair.product)
            << "\nTask: find A^-1 by row reducing [A | I].\n";
        if (opt.show_solution) {
            const std::size_t n = inv->pair.product.rows();
            out << "\nSolution:\n"
                << text_reduction(hconcat(inv->pair.product, ExactMatrix::identity(n)),
                                  inv->trace, n, opt.show_trace)
                << "A^-1 =\n" << text_grid(inv->inverse);
        }
    } else if (const auto* qr = std::get_if<QRTriple>(&bundle.payload)) {
        out << "A =\n" << text_grid(qr->A)
            << "\nTask: find a QR factorization of A (orthogonal Q, upper-triangular R).\n";
        if (opt.show_solution)
            out << "\nSolution:\nQ =\n" << text_grid(qr->Q) << "R =\n" << text_grid(qr->R);
    } else if (const auto* sys = std::get_if<LinearSystemProblem>(&bundle.payload)) {
        const std::size_t n = sys->A.rows();
        out << "[A | b] =\n" << text_grid(hconcat(sys->A, sys->b), n)
            << "\nTask: solve A x = b.\n";
        if (opt.show_solution) {
            out << "\nSolution:\n"
                << text_reduction(hconcat(sys->A, sys->b), sys->trace, n, opt.show_trace);
            switch (sys->kind) {
                case SystemKind::unique:
                    out << "unique solution x =\n" << text_grid(sys->x);
                    break;
                case SystemKind::infinite:
                    out << "infinitely many solutions; a particular solution is x =\n"
                        << text_grid(sys->x)
                        << text_dependence(sys->dependence, n - sys->dependence.size());
                    break;
                case SystemKind::inconsistent:
                    out << "no solution: the last row of the reduced form reads 0 = 1\n";
                    break;
            }
        }
    }
    return out.str();
}

ordered_json bundle_to_doc(const ProblemBundle& bundle) {
    ordered_json j;
    j["version"] = bundle.version;
    j["kind"] = to_string(bundle.kind);
    j["seed"] = bundle.seed;
    j["config"] = config_to_json(bundle.config);
    j["payload"] = payload_to_json(bundle);
    return j;
}

ProblemBundle bundle_from_doc(const ordered_json& doc) {
    try {
        if (!doc.is_object()) schema_error("top level must be an object");
        const std::string version = field(doc, "version").get<std::string>();
        if (version != kSchemaVersion)
            schema_error("unsupported version '" + version + "'");
        const ProblemKind kind = problem_kind_from_string(field(doc, "kind").get<std::string>());
        ProblemBundle bundle = payload_from_json(kind, field(doc, "payload"));
        bundle.seed = field(doc, "seed").get<std::uint64_t>();
        bundle.config = config_from_json(field(doc, "config"));
        bundle.version = version;
        return bundle;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("schema: ") + e.what(), 0);
    } catch (const contract_violation& e) {
        throw parse_error(std::string("schema: ") + e.what(), 0);
    }
}

ordered_json parse_document(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(e.what(), e.byte);
    }
}

}  // namespace

// ------------------------------------------------------------- public API

std::string to_json(const ProblemBundle& bundle) { return bundle_to_doc(bundle).dump(2) + "\n"; }

ProblemBundle from_json(const std::string& text) {
    return bundle_from_doc(parse_document(text));
}

std::string to_json_many(const std::vector<ProblemBundle>& bundles) {
    ordered_json arr = ordered_json::array();
    for (const ProblemBundle& b : bundles) arr.push_back(bundle_to_doc(b));
    return arr.dump(2) + "\n";
}

std::vector<ProblemBundle> from_json_many(const std::string& text) {
    const ordered_json doc = parse_document(text);
    std::vector<ProblemBundle> bundles;
    if (doc.is_array()) {
        for (const ordered_json& e : doc) bundles.push_back(bundle_from_doc(e));
    } else {
        bundles.push_back(bundle_from_doc(doc));
    }
    return bundles;
}

GenConfig config_from_json_text(const std::string& text) {
    try {
        return config_from_json(parse_document(text));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("schema: ") + e.what(), 0);
    }
}

std::string to_latex(const ProblemBundle& bundle, const RenderOptions& options) {
    std::string body = latex_body(bundle, options);
    if (!options.standalone) return body;
    return "\\documentclass{article}\n\\usepackage{amsmath}\n\\begin{document}\n" + body +
           "\\end{document}\n";
}

std::string to_text(const ProblemBundle& bundle, const RenderOptions& options) {
    return text_body(bundle, options);
}

std::string report_to_text(const VerificationReport& report) {
    std::string out;
    for (const CheckResult& c : report.checks) {
        out += c.name + ": " + (c.passed ? "PASS" : "FAIL");
        if (!c.passed && !c.detail.empty()) out += " (" + c.detail + ")";
        out += "\n";
    }
    out += report.passed ? "verification: PASS\n" : "verification: FAIL\n";
    return out;
}

std::string report_to_json(const VerificationReport& report) {
    ordered_json j;
    ordered_json checks = ordered_json::array();
    for (const CheckResult& c : report.checks) {
        ordered_json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["passed"] = report.passed;
    return j.dump(2) + "\n";
}

}  // namespace nicegen
