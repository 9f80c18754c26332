#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "divgen/diversity.hpp"
#include "divgen/genbin.hpp"
#include "divgen/genperm.hpp"
#include "divgen/lift.hpp"
#include "divgen/opposition.hpp"
#include "divgen/project.hpp"
#include "divgen/serialize.hpp"

namespace py = pybind11;
using namespace divgen;

namespace {

MidpointTie tie_from_string(const std::string& tie) {
  if (tie == "upper") return MidpointTie::ChooseUpper;
  if (tie == "lower") return MidpointTie::ChooseLower;
  throw std::invalid_argument("tie must be 'upper' or 'lower'");
}

LiftPolicy::Rule rule_from_string(const std::string& rule) {
  if (rule == "r1" || rule == "R1") return LiftPolicy::Rule::R1;
  if (rule == "r2" || rule == "R2") return LiftPolicy::Rule::R2;
  throw std::invalid_argument("rule must be 'r1' or 'r2'");
}

template <typename T>
void bind_collection(py::module_& m, const char* name) {
  py::class_<Collection<T>>(m, name)
      .def(py::init<>())
      .def_readwrite("members", &Collection<T>::members)
      .def_readonly("provenance", &Collection<T>::provenance)
      .def("__len__", &Collection<T>::size)
      .def("__getitem__",
           [](const Collection<T>& c, std::size_t i) {
             if (i >= c.size()) throw py::index_error();
             return c.members[i];
           })
      .def("csv", [](const Collection<T>& c) {
        std::ostringstream os;
        write_collection_csv(os, c);
        return os.str();
      })
      .def("json", [](const Collection<T>& c) { return nlohmann::json(c).dump(2); });
}

}  // namespace

PYBIND11_MODULE(_divgen, m) {
  m.doc() = "Diversification-based solution generators: diverse binary, bounded and "
            "permutation collections, opposite points and structured projections.";
  m.attr("__version__") = "0.1.0";

  py::class_<Rng>(m, "Rng")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("uniform01", &Rng::uniform01)
      .def("uniform", &Rng::uniform, py::arg("lo"), py::arg("hi"))
      .def("below", &Rng::below, py::arg("n"))
      .def("bit", &Rng::bit);

  py::class_<BinaryVector>(m, "BinaryVector")
      .def(py::init<std::vector<std::uint8_t>>(), py::arg("bits"))
      .def_readonly("bits", &BinaryVector::bits)
      .def("__len__", &BinaryVector::size)
      .def("__eq__", [](const BinaryVector& a, const BinaryVector& b) { return a == b; })
      .def("complemented", &BinaryVector::complemented)
      .def_static("zeros", &BinaryVector::zeros, py::arg("n"))
      .def_static("ones", &BinaryVector::ones, py::arg("n"))
      .def_static("random", &BinaryVector::random, py::arg("n"), py::arg("rng"))
      .def("__repr__", [](const BinaryVector& x) {
        std::string s = "BinaryVector(";
        for (std::size_t j = 0; j < x.size(); ++j) {
          if (j) s += ",";
          s += x.bits[j] ? "1" : "0";
        }
        return s + ")";
      });

  py::class_<BoundedInterval>(m, "BoundedInterval")
      .def(py::init<double, double>(), py::arg("lower"), py::arg("upper"))
      .def(py::init<double, double, double, double>(), py::arg("lower"), py::arg("upper"),
           py::arg("lambda_lower"), py::arg("lambda_upper"))
      .def_readwrite("lower", &BoundedInterval::lower)
      .def_readwrite("upper", &BoundedInterval::upper)
      .def_readwrite("lambda_lower", &BoundedInterval::lambda_lower)
      .def_readwrite("lambda_upper", &BoundedInterval::lambda_upper)
      .def("contracted_lower", &BoundedInterval::contracted_lower)
      .def("contracted_upper", &BoundedInterval::contracted_upper)
      .def("midpoint", &BoundedInterval::midpoint);

  py::class_<BoundedVector>(m, "BoundedVector")
      .def(py::init<std::vector<double>, std::vector<BoundedInterval>,
                    std::vector<std::uint8_t>>(),
           py::arg("values"), py::arg("intervals"),
           py::arg("integral") = std::vector<std::uint8_t>{})
      .def_static("uniform_bounds", &BoundedVector::uniform_bounds, py::arg("values"),
                  py::arg("interval"), py::arg("integral") = false)
      .def_readonly("values", &BoundedVector::values)
      .def_readonly("intervals", &BoundedVector::intervals)
      .def_readonly("integral", &BoundedVector::integral)
      .def("__len__", &BoundedVector::size)
      .def("__eq__", [](const BoundedVector& a, const BoundedVector& b) { return a == b; });

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("order"))
      .def_readonly("order", &Permutation::order)
      .def("__len__", &Permutation::size)
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("reversed", &Permutation::reversed)
      .def_static("identity", &Permutation::identity, py::arg("n"));

  py::class_<Provenance>(m, "Provenance")
      .def_readonly("generator", &Provenance::generator)
      .def_readonly("params", &Provenance::params)
      .def_readonly("rng_seed", &Provenance::rng_seed)
      .def_readonly("rng_algorithm", &Provenance::rng_algorithm);

  bind_collection<BinaryVector>(m, "BinaryCollection");
  bind_collection<BoundedVector>(m, "BoundedCollection");
  bind_collection<Permutation>(m, "PermutationCollection");

  m.def("validate", [](const BinaryVector& x) { return validate(x).issues; });
  m.def("validate", [](const BoundedVector& x) { return validate(x).issues; });
  m.def("validate", [](const Permutation& x) { return validate(x).issues; });

  // opposition
  m.def("obl_opposite", &obl_opposite, py::arg("x_prime"), py::arg("interval"));
  m.def("dbl_bounds", &dbl_bounds, py::arg("interval"));
  m.def(
      "dbl_opposite",
      [](double x, const BoundedInterval& iv, bool integral, const std::string& tie) {
        return dbl_opposite(x, iv, integral, tie_from_string(tie));
      },
      py::arg("x_prime"), py::arg("interval"), py::arg("integral") = false,
      py::arg("tie") = "upper");

  py::class_<LambdaPolicy>(m, "LambdaPolicy")
      .def_static("from_intervals", &LambdaPolicy::from_intervals)
      .def_static("fixed", &LambdaPolicy::fixed, py::arg("lambda_lower"),
                  py::arg("lambda_upper"))
      .def_static(
          "per_component_random",
          [](double lo, double hi, std::uint64_t seed) {
            return LambdaPolicy::per_component_random({lo, hi}, seed);
          },
          py::arg("lo"), py::arg("hi"), py::arg("seed"));

  m.def(
      "dbl_opposite_vector",
      [](const BoundedVector& x, const LambdaPolicy& policy, const std::string& tie) {
        return dbl_opposite_vector(x, policy, tie_from_string(tie));
      },
      py::arg("x_prime"), py::arg("lambda_policy") = LambdaPolicy::from_intervals(),
      py::arg("tie") = "upper");

  py::class_<SortedColumn>(m, "SortedColumn")
      .def(py::init([](std::vector<double> values, double lo, double hi) {
             return SortedColumn{std::move(values), lo, hi};
           }),
           py::arg("values"), py::arg("lower_sentinel"), py::arg("upper_sentinel"))
      .def_readwrite("values", &SortedColumn::values)
      .def_readwrite("lower_sentinel", &SortedColumn::lower_sentinel)
      .def_readwrite("upper_sentinel", &SortedColumn::upper_sentinel);

  m.def("maxmin_opposite_component", &maxmin_opposite_component, py::arg("column"));
  m.def("maxmin_opposite", &maxmin_opposite, py::arg("collection"), py::arg("bounds"),
        py::arg("contracted_sentinels") = false);

  // binary generators
  m.def(
      "first_generator",
      [](const BinaryVector& seed, int h_max, std::optional<std::uint64_t> max_solutions,
         int q_stride, int h_stride, bool augmented) {
        FirstGenParams p;
        p.h_max = h_max;
        p.max_solutions = max_solutions.value_or(FirstGenParams::kUnlimited);
        p.q_stride = q_stride;
        p.h_stride = h_stride;
        p.variant = augmented ? FirstGenParams::Variant::Augmented1A
                              : FirstGenParams::Variant::Basic;
        return first_generator(seed, p);
      },
      py::arg("seed"), py::arg("h_max"), py::arg("max_solutions") = std::nullopt,
      py::arg("q_stride") = 1, py::arg("h_stride") = 1, py::arg("augmented") = false);
  m.def(
      "first_generator_1a",
      [](const BinaryVector& seed, int h_max, std::optional<std::uint64_t> max_solutions,
         int q_stride, int h_stride) {
        FirstGenParams p;
        p.h_max = h_max;
        p.max_solutions = max_solutions.value_or(FirstGenParams::kUnlimited);
        p.q_stride = q_stride;
        p.h_stride = h_stride;
        return first_generator_1a(seed, p);
      },
      py::arg("seed"), py::arg("h_max"), py::arg("max_solutions") = std::nullopt,
      py::arg("q_stride") = 1, py::arg("h_stride") = 1);
  m.def("sequential_generator", &sequential_generator, py::arg("seed"));

  // permutation generator
  m.def("subsequence", &subsequence, py::arg("p"), py::arg("h"), py::arg("s"));
  m.def("stride_permutation", &stride_permutation, py::arg("p"), py::arg("h"));
  m.def(
      "generate_perm",
      [](const Permutation& p, std::vector<int> h_values, bool include_reversals,
         bool sqrt_only) {
        PermGenParams params;
        params.h_values =
            sqrt_only ? PermGenParams::sqrt_h_values(p.size()) : std::move(h_values);
        params.include_reversals = include_reversals;
        return generate_perm(p, params);
      },
      py::arg("p"), py::arg("h_values") = std::vector<int>{},
      py::arg("include_reversals") = true, py::arg("sqrt_only") = false);

  // lift
  m.def(
      "binarize_seed",
      [](const BoundedVector& seed, int midpoint_bit) {
        LiftPolicy policy;
        policy.midpoint_bit = midpoint_bit;
        return binarize_seed(seed, policy);
      },
      py::arg("seed"), py::arg("midpoint_bit") = 1);
  m.def(
      "lift_collection",
      [](const BoundedVector& seed, const BinaryCollection& binary, const std::string& rule,
         const LambdaPolicy& lambda_policy, int midpoint_bit) {
        LiftPolicy policy;
        policy.rule = rule_from_string(rule);
        policy.lambda = lambda_policy;
        policy.midpoint_bit = midpoint_bit;
        return lift_collection(seed, binary, policy);
      },
      py::arg("seed"), py::arg("binary_collection"), py::arg("rule") = "r1",
      py::arg("lambda_policy") = LambdaPolicy::from_intervals(),
      py::arg("midpoint_bit") = 1);

  // projection
  py::class_<FrequencyMemory>(m, "FrequencyMemory")
      .def(py::init<>())
      .def(py::init([](std::vector<std::uint64_t> counts, std::uint64_t total) {
             return FrequencyMemory{std::move(counts), total};
           }),
           py::arg("counts"), py::arg("total"))
      .def_readwrite("counts", &FrequencyMemory::counts)
      .def_readwrite("total", &FrequencyMemory::total)
      .def("record", &FrequencyMemory::record, py::arg("anchor"), py::arg("solution"));

  py::class_<ProximityObjective>(m, "ProximityObjective")
      .def_readonly("coefficients", &ProximityObjective::coefficients)
      .def_readonly("anchor", &ProximityObjective::anchor);

  py::class_<ConstraintSystem>(m, "ConstraintSystem")
      .def_static(
          "gub",
          [](std::vector<std::vector<int>> blocks) {
            for (auto& b : blocks)
              for (int& j : b) --j;  // python callers pass 1-based blocks, like JSON
            return ConstraintSystem::gub(std::move(blocks));
          },
          py::arg("blocks"))
      .def_static(
          "generalized_multichoice",
          [](std::vector<std::vector<int>> blocks, std::vector<int> rhs) {
            for (auto& b : blocks)
              for (int& j : b) --j;
            return ConstraintSystem::generalized_multichoice(std::move(blocks),
                                                             std::move(rhs));
          },
          py::arg("blocks"), py::arg("rhs"))
      .def_static("cardinality", &ConstraintSystem::cardinality, py::arg("n"), py::arg("m1"))
      .def_static("box", &ConstraintSystem::box, py::arg("bounds"))
      .def("satisfied_by", &ConstraintSystem::satisfied_by, py::arg("x"));

  m.def("build_coefficients",
        py::overload_cast<const BinaryVector&>(&build_coefficients), py::arg("anchor"));
  m.def(
      "build_coefficients",
      [](const BinaryVector& anchor, const FrequencyMemory& memory, double beta,
         std::optional<std::uint64_t> jitter_seed) {
        if (jitter_seed) {
          Rng rng(*jitter_seed);
          return build_coefficients(anchor, memory, beta, &rng);
        }
        return build_coefficients(anchor, memory, beta);
      },
      py::arg("anchor"), py::arg("memory"), py::arg("beta"),
      py::arg("jitter_seed") = std::nullopt);
  m.def("l1_objective", &l1_objective, py::arg("anchor"),
        py::arg("weights") = std::vector<double>{});
  m.def("evaluate_proximity",
        py::overload_cast<const ProximityObjective&, const BinaryVector&>(
            &evaluate_proximity),
        py::arg("objective"), py::arg("x"));
  m.def("evaluate_proximity",
        py::overload_cast<const ProximityObjective&, const BoundedVector&>(
            &evaluate_proximity),
        py::arg("objective"), py::arg("x"));
  m.def("project_gub", &project_gub, py::arg("objective"), py::arg("constraints"));
  m.def("project_generalized_multichoice", &project_generalized_multichoice,
        py::arg("objective"), py::arg("constraints"));
  m.def("project_cardinality", &project_cardinality, py::arg("objective"), py::arg("m1"),
        py::arg("n"));
  m.def("project_box", &project_box, py::arg("anchor"), py::arg("bounds"));

  // diversity
  py::class_<DiversityReport>(m, "DiversityReport")
      .def_property_readonly("metric",
                             [](const DiversityReport& r) { return metric_name(r.metric); })
      .def_readonly("member_count", &DiversityReport::member_count)
      .def_readonly("min_pairwise", &DiversityReport::min_pairwise)
      .def_readonly("mean_pairwise", &DiversityReport::mean_pairwise)
      .def_readonly("min_to_seed", &DiversityReport::min_to_seed)
      .def("csv", &to_csv_row);

  m.def(
      "distance",
      [](const BinaryVector& a, const BinaryVector& b, const std::string& metric) {
        return distance(a, b, metric_from_name(metric));
      },
      py::arg("a"), py::arg("b"), py::arg("metric") = "hamming");
  m.def(
      "distance",
      [](const Permutation& a, const Permutation& b, const std::string& metric) {
        return distance(a, b, metric_from_name(metric));
      },
      py::arg("a"), py::arg("b"), py::arg("metric") = "hamming");
  m.def(
      "distance",
      [](const BoundedVector& a, const BoundedVector& b, const std::string& metric,
         const std::vector<double>& weights) {
        return distance(a, b, metric_from_name(metric), weights);
      },
      py::arg("a"), py::arg("b"), py::arg("metric") = "weighted-l1",
      py::arg("weights") = std::vector<double>{});

  m.def(
      "report",
      [](const BinaryCollection& c, const BinaryVector& seed, const std::string& metric) {
        return report(c, seed, metric_from_name(metric));
      },
      py::arg("collection"), py::arg("seed"), py::arg("metric") = "hamming");
  m.def(
      "report",
      [](const BoundedCollection& c, const BoundedVector& seed, const std::string& metric) {
        return report(c, seed, metric_from_name(metric));
      },
      py::arg("collection"), py::arg("seed"), py::arg("metric") = "weighted-l1");
  m.def(
      "report",
      [](const PermutationCollection& c, const Permutation& seed,
         const std::string& metric) { return report(c, seed, metric_from_name(metric)); },
      py::arg("collection"), py::arg("seed"), py::arg("metric") = "hamming");

  m.def(
      "extract_diverse_subset",
      [](const BinaryCollection& pop, std::size_t k,
         std::optional<BinaryVector> start, const std::string& metric) {
        return extract_diverse_subset(pop, k, start ? &*start : nullptr,
                                      metric_from_name(metric));
      },
      py::arg("population"), py::arg("k"), py::arg("start") = std::nullopt,
      py::arg("metric") = "hamming");
  m.def(
      "extract_diverse_subset",
      [](const BoundedCollection& pop, std::size_t k,
         std::optional<BoundedVector> start, const std::string& metric) {
        return extract_diverse_subset(pop, k, start ? &*start : nullptr,
                                      metric_from_name(metric));
      },
      py::arg("population"), py::arg("k"), py::arg("start") = std::nullopt,
      py::arg("metric") = "weighted-l1");
}
