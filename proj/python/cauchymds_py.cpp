#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "cauchymds/cauchy.hpp"
#include "cauchymds/codec.hpp"
#include "cauchymds/metrics.hpp"
#include "cauchymds/ring.hpp"
#include "cauchymds/shard.hpp"

namespace py = pybind11;
using namespace cauchymds;

namespace {

using Bits = std::vector<std::uint8_t>;

std::vector<Column> to_columns(const CodeParams& params, const std::vector<Bits>& cols) {
  std::vector<Column> out;
  out.reserve(cols.size());
  for (const auto& c : cols) out.push_back(Column::from_bits(params.p(), c));
  return out;
}

std::vector<Bits> from_codeword(const Codeword& cw) {
  std::vector<Bits> out;
  for (const auto& c : cw.columns) out.push_back(c.to_bits());
  return out;
}

std::vector<std::optional<Column>> to_available(const CodeParams& params,
                                                const std::vector<std::optional<Bits>>& cols) {
  if (static_cast<int>(cols.size()) != params.columns()) {
    throw std::invalid_argument("expected one entry per column (k + r)");
  }
  std::vector<std::optional<Column>> out;
  for (const auto& c : cols) {
    if (c) out.emplace_back(Column::from_bits(params.p(), *c));
    else out.emplace_back(std::nullopt);
  }
  return out;
}

Bits coeffs(const RingElement& u) {
  Bits out(static_cast<std::size_t>(u.modulus()));
  for (int i = 0; i < u.modulus(); ++i) out[i] = u.coeff(i) ? 1 : 0;
  return out;
}

std::vector<std::uint8_t> to_vector(const py::bytes& b) {
  const std::string s = b;
  return {s.begin(), s.end()};
}

py::bytes to_bytes(const std::vector<std::uint8_t>& v) {
  return {reinterpret_cast<const char*>(v.data()), v.size()};
}

}  // namespace

PYBIND11_MODULE(_cauchymds, m) {
  m.doc() = "Cauchy MDS array codes over the binary cyclic ring F2[x]/(1+x^p)";

  py::register_exception<shard::DataError>(m, "ShardDataError", PyExc_ValueError);

  py::class_<XorCounter>(m, "XorCounter")
      .def(py::init<>())
      .def_property_readonly("count", &XorCounter::count);

  py::class_<RingElement>(m, "RingElement")
      .def(py::init<int>(), py::arg("p"))
      .def_static("from_exponents",
                  [](int p, const std::vector<int>& exps) {
                    RingElement r(p);
                    for (int e : exps) r.flip(((e % p) + p) % p);
                    return r;
                  },
                  py::arg("p"), py::arg("exponents"))
      .def_static("from_bits",
                  [](int p, const Bits& bits) { return RingElement::from_bits(p, bits); },
                  py::arg("p"), py::arg("bits"))
      .def_static("all_ones", &RingElement::all_ones, py::arg("p"))
      .def_property_readonly("modulus", &RingElement::modulus)
      .def_property_readonly("coeffs", &coeffs)
      .def_property_readonly("weight", &RingElement::weight)
      .def("is_even_weight", &RingElement::is_even_weight)
      .def("is_zero", &RingElement::is_zero)
      .def("__add__", [](const RingElement& a, const RingElement& b) { return add(a, b); })
      .def("__eq__", [](const RingElement& a, const RingElement& b) { return a == b; })
      .def("__hash__", [](const RingElement& a) { return py::hash(py::str(a.to_string())); })
      .def("__str__", &RingElement::to_string)
      .def("__repr__", [](const RingElement& a) {
        return "RingElement(p=" + std::to_string(a.modulus()) + ", " + a.to_string() + ")";
      });

  m.def("constants", [](int p) {
    const auto c = constants(p);
    return py::make_tuple(c.identity, c.check);
  }, py::arg("p"), "(e(x), h(x)) for modulus p");
  m.def("mul_monomial", py::overload_cast<const RingElement&, int>(&mul_monomial),
        py::arg("u"), py::arg("i"));
  m.def("mul_binomial",
        [](const RingElement& u, int lo, int hi) {
          return mul_binomial(u, BinomialExp::between(lo, hi));
        },
        py::arg("u"), py::arg("lo"), py::arg("hi"), "u * (x^lo + x^hi)");
  m.def("div_binomial",
        [](const RingElement& s, int lo, int hi, bool canonical) {
          const auto e = BinomialExp::between(lo, hi);
          return canonical ? div_binomial_canonical(s, e) : div_binomial(s, e);
        },
        py::arg("s"), py::arg("lo"), py::arg("hi"), py::arg("canonical") = false,
        "s / (x^lo + x^hi); the default returns the quotient with a zero top coefficient");
  m.def("div_binomial_counted",
        [](const RingElement& s, int lo, int hi) {
          XorCounter ctr;
          auto q = div_binomial(s, BinomialExp::between(lo, hi), ctr);
          return py::make_tuple(q, ctr.count());
        },
        py::arg("s"), py::arg("lo"), py::arg("hi"));

  m.def("lu_solve",
        [](int p, const std::vector<int>& a, const std::vector<int>& b,
           const std::vector<RingElement>& c) {
          return lu_solve(CauchySystem::make(p, a, b), c);
        },
        py::arg("p"), py::arg("a"), py::arg("b"), py::arg("c"),
        "Solve the Cauchy system with entries 1/(x^a_i + x^b_j)");
  m.def("lu_solve_counted",
        [](int p, const std::vector<int>& a, const std::vector<int>& b,
           const std::vector<RingElement>& c, bool zero_top) {
          std::vector<Tracked> in;
          for (const auto& v : c) in.push_back(zero_top ? Tracked::zero_top(v) : Tracked::unknown(v));
          XorCounter ctr;
          const auto out = lu_solve(CauchySystem::make(p, a, b), in, ctr);
          std::vector<RingElement> values;
          for (const auto& t : out) values.push_back(t.value);
          return py::make_tuple(values, ctr.count());
        },
        py::arg("p"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("zero_top") = true,
        "Like lu_solve, also returning the XOR count. With zero_top, inputs must have a zero "
        "top coefficient and those positions are not charged.");

  py::class_<CodeParams>(m, "CodeParams")
      .def(py::init(&CodeParams::make), py::arg("p"), py::arg("k"), py::arg("r"))
      .def_property_readonly("p", &CodeParams::p)
      .def_property_readonly("k", &CodeParams::k)
      .def_property_readonly("r", &CodeParams::r)
      .def_property_readonly("columns", &CodeParams::columns)
      .def("__repr__", [](const CodeParams& c) {
        return "CodeParams(p=" + std::to_string(c.p()) + ", k=" + std::to_string(c.k()) +
               ", r=" + std::to_string(c.r()) + ")";
      });

  m.def("encode",
        [](const CodeParams& params, const std::vector<Bits>& info) {
          return from_codeword(encode(params, to_columns(params, info)));
        },
        py::arg("params"), py::arg("info"),
        "k lists of p-1 bits in, k+r columns out");
  m.def("encode_counted",
        [](const CodeParams& params, const std::vector<Bits>& info) {
          XorCounter ctr;
          auto cw = encode(params, to_columns(params, info), ctr);
          return py::make_tuple(from_codeword(cw), ctr.count());
        },
        py::arg("params"), py::arg("info"));
  m.def("decode",
        [](const CodeParams& params, const std::vector<std::optional<Bits>>& available) {
          const auto avail = to_available(params, available);
          return from_codeword(decode(params, avail, ErasurePattern::from_available(params, avail)));
        },
        py::arg("params"), py::arg("available"),
        "Rebuild all k+r columns; lost columns are None");
  m.def("decode_counted",
        [](const CodeParams& params, const std::vector<std::optional<Bits>>& available) {
          const auto avail = to_available(params, available);
          XorCounter ctr;
          auto cw = decode(params, avail, ErasurePattern::from_available(params, avail), ctr);
          return py::make_tuple(from_codeword(cw), ctr.count());
        },
        py::arg("params"), py::arg("available"));
  m.def("mds_check", [](int p, int k, int r) { return mds_check(CodeParams::make(p, k, r)); },
        py::arg("p"), py::arg("k"), py::arg("r"));

  m.def("predict_encode_xors", &predict_encode_xors, py::arg("p"), py::arg("k"), py::arg("r"));
  m.def("predict_solve_xors", &predict_solve_xors, py::arg("l"), py::arg("p"));
  m.def("predict_decode_xors", &predict_decode_xors, py::arg("p"), py::arg("k"),
        py::arg("lost_info"), py::arg("lost_parity"));
  m.def("circulant_encode_normalized", &circulant_encode_normalized, py::arg("p"), py::arg("k"),
        py::arg("r"));
  m.def("circulant_decode_normalized", &circulant_decode_normalized, py::arg("p"), py::arg("r"));

  py::class_<ComplexityRow>(m, "ComplexityRow")
      .def_readonly("p", &ComplexityRow::p)
      .def_readonly("k", &ComplexityRow::k)
      .def_readonly("r", &ComplexityRow::r)
      .def_property_readonly("mode", [](const ComplexityRow& row) { return to_string(row.mode); })
      .def_readonly("proposed_formula", &ComplexityRow::proposed_formula)
      .def_readonly("proposed_measured", &ComplexityRow::proposed_measured)
      .def_readonly("circulant_formula", &ComplexityRow::circulant_formula)
      .def_readonly("normalized_proposed", &ComplexityRow::normalized_proposed)
      .def_readonly("normalized_circulant", &ComplexityRow::normalized_circulant)
      .def_property_readonly("reduction_percent", &ComplexityRow::reduction_percent);
  m.def("normalized_curves",
        [](int r, const std::vector<int>& primes) { return normalized_curves(r, primes); },
        py::arg("r"), py::arg("primes"));
  m.def("primes_in_range", &primes_in_range, py::arg("lo"), py::arg("hi"));

  m.def("encode_shards",
        [](const py::bytes& data, const CodeParams& params) {
          const auto bytes = to_vector(data);
          std::vector<py::bytes> out;
          for (const auto& s : shard::encode_bytes(bytes, params)) out.push_back(to_bytes(s));
          return out;
        },
        py::arg("data"), py::arg("params"), "Split bytes into k+r shard images");
  m.def("decode_shards",
        [](const std::vector<py::bytes>& shards) {
          std::vector<std::vector<std::uint8_t>> in;
          for (const auto& s : shards) in.push_back(to_vector(s));
          return to_bytes(shard::decode_bytes(in));
        },
        py::arg("shards"), "Rebuild the original bytes from at least k shard images");
}
