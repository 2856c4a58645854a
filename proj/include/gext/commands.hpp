#pragma once

// Command implementations behind the gext executable. Argument parsing lives
// in the executable; everything here takes parsed options and writes to the
// given streams, returning the process exit code.

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gext/error.hpp"
#include "gext/ext.hpp"
#include "gext/io.hpp"
#include "gext/resolution.hpp"
#include "gext/rim.hpp"
#include "gext/snf.hpp"
#include "gext/svg.hpp"
#include "gext/trapezia.hpp"

namespace gext::cli {

enum ExitCode : int { kOk = 0, kInput = 2, kMismatch = 3, kIo = 4, kSizeCap = 5 };

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooLarge: return kSizeCap;
    case ErrorCode::KernelRelationFailed:
    case ErrorCode::NonMonomialFactor: return kMismatch;
    default: return kInput;
  }
}

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

struct PeriodOptions {
  int n = 0, k = 0;
  std::string rim;
  bool verify = false;
  bool json = false;
};

struct ExtOptions {
  int n = 0, k = 0;
  std::string rim_i, rim_j;
  int degree = 1;
  bool verify = false;
  bool json = false;
};

struct PairOptions {
  int n = 0, k = 0;
  std::string rim_i;
  std::string rim_j;  // optional for matrix and render
  bool json = false;
  std::string out;  // render only; empty means stdout
};

struct TableOptions {
  int n = 0, k = 0;
  std::string format = "csv";
};

/// GEXT_MAX_N if set to a positive integer, otherwise the default cap.
inline int enumeration_cap() {
  if (const char* env = std::getenv("GEXT_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1000) return static_cast<int>(v);
  }
  return kDefaultTableCap;
}

namespace detail {

inline Json pair_input(int n, int k, const Rim& i, const std::optional<Rim>& j) {
  Json in;
  in["n"] = n;
  in["k"] = k;
  in["rim_i"] = rim_json(i);
  if (j) in["rim_j"] = rim_json(*j);
  return in;
}

inline std::string factor_text(const ExtDecomposition& e) {
  const auto f = e.factors();
  if (f.empty()) return "0";
  std::string s;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (x) s += " x ";
    s += f[x] == 1 ? "F[t]/(t)" : "F[t]/(t^" + std::to_string(f[x]) + ")";
  }
  return s;
}

inline std::string monomial_text(const Monomial& m) {
  std::string s = m.sign < 0 ? "-" : "";
  return s + (m.exponent == 0 ? "1" : m.exponent == 1 ? "t" : "t^" + std::to_string(m.exponent));
}

template <typename Fn>
int guarded(const Streams& io, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    io.err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    io.err << "error: " << e.what() << "\n";
    return kInput;
  }
}

// Independent check of an odd-degree answer: determinantal divisors of D*.
inline bool verify_odd(const ExtDecomposition& e, const Rim& j) {
  if (is_projective(e.context)) return e.is_zero();
  const auto oracle = snf_oracle(build_Dstar(e.context, j));
  return oracle.exponents == e.exponents && oracle.zero_count == 1;
}

// Independent check of an even-degree answer: the full a_uv table and, for
// degree 2, the valley criterion for vanishing.
inline bool verify_even(const ExtDecomposition& e, const Rim& j) {
  if (is_projective(e.context)) return e.is_zero();
  int lo = -1;
  for (const auto& x : even_offset_table(e.context, j)) lo = lo < 0 ? x.value : std::min(lo, x.value);
  if (lo != e.a) return false;
  if (e.degree == 2) return ext2_vanishes(e.context, j).vanishes == e.is_zero();
  return true;
}

}  // namespace detail

inline int run_period(const PeriodOptions& o, const Streams& io) {
  return detail::guarded(io, [&] {
    const Rim rim = parse_rim(o.rim, o.n, o.k);
    const PeriodResult p = period_closed_form(rim);
    bool verified = false;
    if (o.verify) {
      const PeriodResult q = period_iterative(rim);
      if (!(p == q)) {
        io.err << "error: closed form gives " << p.to_string() << ", iteration gives " << q.to_string() << "\n";
        return static_cast<int>(kMismatch);
      }
      verified = true;
    }
    if (o.json) {
      QueryResult q{"period", {{"n", o.n}, {"k", o.k}, {"rim", rim_json(rim)}}, {}, {"closed_form", 0, verified}};
      q.result["period"] = p.is_projective() ? Json("projective") : Json(p.value());
      io.out << dump(q);
    } else {
      io.out << p.to_string() << (verified ? ", verified" : "") << "\n";
    }
    return static_cast<int>(kOk);
  });
}

inline int run_ext(const ExtOptions& o, const Streams& io) {
  return detail::guarded(io, [&] {
    const Rim i = parse_rim(o.rim_i, o.n, o.k);
    const Rim j = parse_rim(o.rim_j, o.n, o.k);
    const ExtDecomposition e = ext(i, j, o.degree);
    bool verified = false;
    if (o.verify) {
      const bool ok = o.degree % 2 ? detail::verify_odd(e, j) : detail::verify_even(e, j);
      if (!ok) {
        io.err << "error: independent check disagrees with Ext^" << o.degree << "\n";
        return static_cast<int>(kMismatch);
      }
      verified = true;
    }
    if (o.json) {
      Json in = detail::pair_input(o.n, o.k, i, j);
      in["degree"] = o.degree;
      const std::string path = o.degree % 2 ? "invariant_factors" : "min_offset";
      io.out << dump({"ext", in, ext_json(e), {path, 0, verified}});
    } else {
      io.out << "Ext^" << o.degree << " = " << detail::factor_text(e) << "\n"
             << "dimension " << e.dimension << (verified ? ", verified" : "") << "\n";
    }
    return static_cast<int>(kOk);
  });
}

inline int run_word(const PairOptions& o, const Streams& io) {
  return detail::guarded(io, [&] {
    const Rim i = parse_rim(o.rim_i, o.n, o.k);
    const Rim j = parse_rim(o.rim_j, o.n, o.k);
    const TrapeziumWord w = build_word(i, j);
    if (o.json) {
      io.out << dump({"word", detail::pair_input(o.n, o.k, i, j), word_json(w), {"edge_scan", w.rotation, false}});
    } else {
      io.out << "raw " << w.raw() << "\nreduced " << w.reduced() << "\ns " << w.s() << "\nboxes";
      for (const auto& b : w.boxes) io.out << " (" << b.left << "," << b.right << ")";
      io.out << "\n";
    }
    return static_cast<int>(kOk);
  });
}

/// D for one rim, D* when a second rim is given.
inline int run_matrix(const PairOptions& o, const Streams& io) {
  return detail::guarded(io, [&] {
    const Rim i = parse_rim(o.rim_i, o.n, o.k);
    std::optional<Rim> j;
    if (!o.rim_j.empty()) j = parse_rim(o.rim_j, o.n, o.k);

    MonomialMatrix m;
    if (j) {
      m = build_Dstar(i, *j);
    } else {
      const auto d = build_D(i);
      if (d.degenerate) throw Error(ErrorCode::ProjectiveModule, i.to_string() + " is projective");
      m = MonomialMatrix(d.row_valleys, d.col_peaks);
      for (const auto& e : d.entries) m.set(e.row, e.col, {e.sign, e.exponent});
    }

    if (o.json) {
      io.out << dump({"matrix", detail::pair_input(o.n, o.k, i, j), matrix_json(m), {j ? "dstar" : "d", 0, false}});
      return static_cast<int>(kOk);
    }
    io.out << (j ? "D*" : "D") << " rows " << Json(m.row_labels()).dump() << " cols " << Json(m.col_labels()).dump()
           << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (c) io.out << " ";
        const Monomial* x = m.at(r, c);
        if (!x) {
          io.out << "0";
        } else if (j) {
          io.out << detail::monomial_text(*x);
        } else {
          // in D the sign tells the arrow: +x^e below the diagonal, -y^e on it
          io.out << (x->sign < 0 ? "-y^" : "x^") << x->exponent;
        }
      }
      io.out << "\n";
    }
    return static_cast<int>(kOk);
  });
}

inline int run_table(const TableOptions& o, const Streams& io) {
  return detail::guarded(io, [&] {
    if (o.format != "csv" && o.format != "json") throw Error(ErrorCode::InvalidRim, "unknown format " + o.format);
    const DimensionTable t = ext1_dimension_table(o.n, o.k, enumeration_cap());
    if (o.format == "json") {
      Json rims = Json::array();
      for (const auto& r : t.rims) rims.push_back(rim_json(r));
      io.out << dump({"table", {{"n", o.n}, {"k", o.k}}, {{"rims", rims}, {"dims", t.dims}}, {"ext1", 0, false}});
      return static_cast<int>(kOk);
    }
    auto label = [](const Rim& r) {
      std::string s;
      for (int x : r.elements()) s += (s.empty() ? "" : " ") + std::to_string(x);
      return s;
    };
    io.out << "I\\J";
    for (const auto& r : t.rims) io.out << "," << label(r);
    io.out << "\n";
    for (std::size_t a = 0; a < t.rims.size(); ++a) {
      io.out << label(t.rims[a]);
      for (int d : t.dims[a]) io.out << "," << d;
      io.out << "\n";
    }
    return static_cast<int>(kOk);
  });
}

inline int run_render(const PairOptions& o, const Streams& io) {
  return detail::guarded(io, [&] {
    const Rim i = parse_rim(o.rim_i, o.n, o.k);
    std::optional<Rim> j;
    if (!o.rim_j.empty()) j = parse_rim(o.rim_j, o.n, o.k);
    const std::string svg = render_svg(i, j);
    if (o.out.empty()) {
      io.out << svg;
      return static_cast<int>(kOk);
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f || !(f << svg) || !f.flush()) {
      io.err << "error: cannot write " << o.out << "\n";
      return static_cast<int>(kIo);
    }
    return static_cast<int>(kOk);
  });
}

}  // namespace gext::cli
