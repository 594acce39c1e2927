#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fcsph/cli.hpp"
#include "fcsph/errors.hpp"
#include "fcsph/ideals.hpp"
#include "fcsph/spherical.hpp"
#include "fcsph/verify.hpp"

namespace py = pybind11;
using namespace fcsph;

namespace {

using Coords = std::vector<int>;

RootSystemPtr system_of(const std::string& type) { return RootSystem::build(CartanType::parse(type)); }

Coords coords_of(const RootSystem& rs, int r) {
  const auto c = rs.coords(r);
  return Coords(c.begin(), c.end());
}

std::vector<Coords> coords_list(const RootSystem& rs, const std::vector<int>& roots) {
  std::vector<Coords> out;
  for (int r : roots) out.push_back(coords_of(rs, r));
  return out;
}

int root_index(const RootSystem& rs, const Coords& c) {
  const auto r = rs.find(c);
  if (!r) throw InvalidArgument("not a root of " + rs.type().name());
  return *r;
}

RootSet root_set(const RootSystem& rs, const std::vector<Coords>& roots) {
  RootSet s = rs.empty_set();
  for (const auto& c : roots) {
    const int r = root_index(rs, c);
    if (!rs.is_positive(r)) throw InvalidArgument("root is not positive");
    s.insert(r);
  }
  return s;
}

WeylElement element(const std::string& type, const Word& word) {
  auto rs = system_of(type);
  for (int i : word)
    if (i < 1 || i > rs->rank()) throw InvalidArgument("simple index " + std::to_string(i) + " out of range");
  return WeylElement::from_word(rs, word);
}

py::tuple run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"fcsph"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

std::string verify(const std::string& target, const std::string& type, std::uint64_t seed, int workers, int trials) {
  VerifyOptions opts;
  opts.seed = seed;
  opts.workers = workers;
  opts.trials = trials;
  py::gil_scoped_release release;
  const bool weyl = target != "theorem2";
  const VerifyContext ctx = make_context(CartanType::parse(type), opts, weyl, true);
  Report r;
  if (target == "theorem1") r = verify_theorem1(ctx, opts);
  else if (target == "theorem2") r = verify_theorem2(ctx, opts);
  else if (target == "subspaces") r = verify_subspace_theorem(ctx, opts);
  else if (target == "lemmas") r = verify_lemmas(ctx, opts);
  else if (target == "g2") r = verify_g2(ctx, opts);
  else if (target == "words") r = verify_word_criteria(ctx, opts);
  else throw InvalidArgument("unknown verification target " + target);
  return to_json(r).dump(2);
}

}  // namespace

PYBIND11_MODULE(_fcsph, m) {
  m.doc() = "Fully commutative elements and spherical nilpotent orbits";

  // Translators registered later are tried first.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.attr("code_version") = kCodeVersion;
  m.attr("schema_version") = kSchemaVersion;

  m.def("weyl_order", [](const std::string& type) { return CartanType::parse(type).weyl_order(); }, py::arg("type"));
  m.def(
      "positive_roots",
      [](const std::string& type) {
        auto rs = system_of(type);
        std::vector<Coords> out;
        for (int r = 0; r < rs->num_positive(); ++r) out.push_back(coords_of(*rs, r));
        return out;
      },
      py::arg("type"));
  m.def(
      "pairing",
      [](const std::string& type, const Coords& a, const Coords& b) {
        auto rs = system_of(type);
        return rs->pairing(root_index(*rs, a), root_index(*rs, b));
      },
      py::arg("type"), py::arg("a"), py::arg("b"));
  m.def(
      "inversion_set",
      [](const std::string& type, const Word& word) {
        const WeylElement w = element(type, word);
        return coords_list(w.system(), w.inversions().members());
      },
      py::arg("type"), py::arg("word"));
  m.def(
      "reduced_word", [](const std::string& type, const Word& word) { return element(type, word).word(); },
      py::arg("type"), py::arg("word"));
  m.def(
      "is_fully_commutative", [](const std::string& type, const Word& word) { return is_fc_inv(element(type, word)); },
      py::arg("type"), py::arg("word"));
  m.def(
      "is_commutative", [](const std::string& type, const Word& word) { return is_commutative_inv(element(type, word)); },
      py::arg("type"), py::arg("word"));
  m.def(
      "pairing_nonneg",
      [](const std::string& type, const std::vector<Coords>& roots) {
        auto rs = system_of(type);
        return pairing_nonneg(*rs, root_set(*rs, roots));
      },
      py::arg("type"), py::arg("roots"));
  m.def(
      "is_spherical",
      [](const std::string& type, const std::vector<Coords>& roots) {
        auto rs = system_of(type);
        auto L = ChevalleyAlgebra::build(rs);
        return !spherical_witness_direct(*L, root_set(*rs, roots)).has_value();
      },
      py::arg("type"), py::arg("roots"));
  m.def(
      "height",
      [](const std::string& type, const std::vector<std::pair<Coords, long>>& terms) {
        auto rs = system_of(type);
        auto L = ChevalleyAlgebra::build(rs);
        std::map<int, mpq_class> c;
        for (const auto& [root, coeff] : terms) c[root_index(*rs, root)] += coeff;
        return fcsph::height(*L, nilpotent(*L, c));
      },
      py::arg("type"), py::arg("terms"));
  m.def(
      "ideals",
      [](const std::string& type) {
        auto rs = system_of(type);
        std::vector<std::vector<Coords>> out;
        for (const auto& I : enumerate_ideals(*rs)) out.push_back(coords_list(*rs, I.members.members()));
        return out;
      },
      py::arg("type"));
  m.def(
      "ideal_element",
      [](const std::string& type, const std::vector<Coords>& generators) {
        auto rs = system_of(type);
        std::vector<int> g;
        for (const auto& c : generators) g.push_back(root_index(*rs, c));
        return w_of_ideal(rs, ideal_generated_by(*rs, g)).word();
      },
      py::arg("type"), py::arg("generators"));
  m.def("verify_json", &verify, py::arg("target"), py::arg("type"), py::arg("seed") = 0, py::arg("workers") = 1,
        py::arg("trials") = kDefaultTrials);
  m.def("run_cli", &run, py::arg("args"));
}
