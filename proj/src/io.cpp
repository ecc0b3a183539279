#include "tworep/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "tworep/errors.hpp"

namespace tworep::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

GModule module_from_json(const Json& m, const FiniteGroup& g, int level) {
  if (m.is_string() && m.get<std::string>() == "trivial") return GModule::trivial(level);
  const int size = field(m, "set").get<int>();
  auto action = field(m, "action").get<std::vector<std::vector<int>>>();
  if (size < 1 || static_cast<int>(action.size()) != g.order())
    throw ParseError("module action needs one row per group element");
  for (const auto& row : action)
    if (static_cast<int>(row.size()) != size) throw ParseError("module action rows must have length \"set\"");
  return GModule::permutation(g, level, action);
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json to_json(const FiniteGroup& g) {
  Json j;
  j["name"] = g.name();
  if (const auto& src = g.permutation_source()) {
    j["degree"] = src->degree;
    j["generators"] = src->generators;
  } else {
    j["order"] = g.order();
    j["cayley"] = g.cayley();
  }
  return j;
}

FiniteGroup group_from_json(const Json& j, std::size_t max_order) {
  return guarded("group", [&] {
    const std::string name = j.contains("name") ? field(j, "name").get<std::string>() : "G";
    if (j.contains("generators")) {
      const int degree = field(j, "degree").get<int>();
      auto gens = field(j, "generators").get<std::vector<std::vector<int>>>();
      return FiniteGroup::from_permutation_generators(degree, gens, name, max_order);
    }
    const auto order = field(j, "order").get<long long>();
    if (order < 1) throw ParseError("order must be positive");
    if (static_cast<std::size_t>(order) > max_order)
      throw TooLarge("group order " + std::to_string(order) + " exceeds the bound " + std::to_string(max_order));
    auto table = field(j, "cayley").get<std::vector<std::vector<int>>>();
    if (static_cast<long long>(table.size()) != order) throw ParseError("cayley table must have \"order\" rows");
    return FiniteGroup::from_cayley_table(table, name);
  });
}

Json to_json(const Cochain& c) {
  Json j;
  j["group"] = c.group()->name();
  j["level"] = c.level();
  const GModule& m = c.module();
  if (m.is_trivial()) {
    j["module"] = "trivial";
  } else {
    j["module"] = {{"set", m.size()}, {"action", m.action_table(c.group()->order())}};
  }
  j["degree"] = c.degree();
  j["values"] = c.values();
  return j;
}

Cochain cochain_from_json(const Json& j, const GroupPtr& group) {
  return guarded("cocycle", [&] {
    const int level = field(j, "level").get<int>();
    if (level < 1) throw ParseError("level must be positive");
    GModule m = module_from_json(field(j, "module"), *group, level);
    const int degree = field(j, "degree").get<int>();
    if (degree < 0 || degree > 4) throw ParseError("degree must lie in 0..4");
    auto values = field(j, "values").get<std::vector<Value>>();
    Cochain c(group, m, degree);
    if (values.size() != c.values().size())
      throw ParseError("expected " + std::to_string(c.values().size()) + " values, got " +
                       std::to_string(values.size()));
    for (auto& v : values) v = zmod::reduce(v, level);
    return Cochain(group, m, degree, std::move(values));
  });
}

Json to_json(const Rep2& r) {
  Json j;
  j["group"] = r.group()->name();
  Json orbits = Json::array();
  for (std::size_t k = 0; k < r.orbits().size(); ++k)
    orbits.push_back({{"subgroup", r.orbit_subgroup(k).elements()}, {"cocycle", to_json(r.orbit_cocycle(k))}});
  j["orbits"] = std::move(orbits);
  return j;
}

Rep2 rep2_from_json(const Json& j, const AtlasPtr& atlas) {
  return guarded("2-representation", [&] {
    std::vector<std::pair<Subgroup, Cochain>> orbits;
    for (const auto& o : field(j, "orbits")) {
      auto elems = field(o, "subgroup").get<std::vector<Element>>();
      std::sort(elems.begin(), elems.end());
      const Subgroup& p = atlas->subgroup(atlas->index_of(elems));
      Cochain mu = cochain_from_json(field(o, "cocycle"), p.as_group());
      if (mu.degree() != 2 || !mu.module().is_trivial())
        throw ParseError("orbit cocycles must be degree 2 with trivial coefficients");
      if (!is_cocycle(mu)) throw NotACocycle("orbit cocycle over subgroup of order " + std::to_string(p.order()));
      orbits.emplace_back(p, std::move(mu));
    }
    return Rep2::from_orbits(atlas, orbits);
  });
}

Json to_json(const RootOfUnity& r) { return {{"level", r.level}, {"exp", r.exponent}}; }

Json to_json(const CycloInt& c) {
  Json coeffs = Json::array();
  for (const auto& x : c.coeffs()) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
      coeffs.push_back(static_cast<long long>(x));
    else
      coeffs.push_back(x.str());
  }
  return {{"level", c.level()}, {"coeffs", std::move(coeffs)}};
}

RootOfUnity root_from_json(const Json& j) {
  return guarded("root of unity", [&] {
    const int level = field(j, "level").get<int>();
    if (level < 1) throw ParseError("level must be positive");
    return RootOfUnity(level, field(j, "exp").get<long long>());
  });
}

CycloInt cyclo_from_json(const Json& j) {
  return guarded("cyclotomic integer", [&] {
    const int level = field(j, "level").get<int>();
    if (level < 1) throw ParseError("level must be positive");
    CycloInt out(level);
    long long k = 0;
    for (const auto& c : field(j, "coeffs")) {
      BigInt v = c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<long long>());
      out += CycloInt::integer(v, level) * CycloInt::zeta_power(level, k++);
    }
    return out;
  });
}

Json to_json(const CrossedModule& k) {
  return {{"H", to_json(*k.h())},
          {"G", to_json(*k.g())},
          {"boundary", k.boundary_map()},
          {"action", k.action_table()}};
}

CrossedModule crossed_from_json(const Json& j, std::size_t max_order) {
  return guarded("crossed module", [&] {
    auto h = share(group_from_json(field(j, "H"), max_order));
    auto g = share(group_from_json(field(j, "G"), max_order));
    auto boundary = field(j, "boundary").get<std::vector<Element>>();
    auto action = field(j, "action").get<std::vector<std::vector<Element>>>();
    if (static_cast<int>(boundary.size()) != h->order()) throw ParseError("boundary needs one entry per element of H");
    for (Element b : boundary)
      if (b < 0 || b >= g->order()) throw ParseError("boundary value out of range");
    if (static_cast<int>(action.size()) != g->order()) throw ParseError("action needs one row per element of G");
    for (const auto& row : action) {
      if (static_cast<int>(row.size()) != h->order()) throw ParseError("action rows need one entry per element of H");
      for (Element x : row)
        if (x < 0 || x >= h->order()) throw ParseError("action value out of range");
    }
    return CrossedModule::validate(h, g, boundary, action);
  });
}

const GroupPtr& Corpus::group(const std::string& name) const {
  auto it = groups.find(name);
  if (it == groups.end()) throw InvalidArgument("corpus has no group " + name);
  return it->second;
}

Corpus load_corpus(const std::string& dir, std::size_t max_order) {
  namespace fs = std::filesystem;
  Corpus c;
  auto sorted_files = [&](const fs::path& sub) {
    std::vector<fs::path> files;
    if (!fs::is_directory(sub)) throw ParseError("missing corpus directory " + sub.string());
    for (const auto& e : fs::directory_iterator(sub))
      if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    return files;
  };
  for (const auto& f : sorted_files(fs::path(dir) / "groups"))
    c.groups.emplace(f.stem().string(), share(group_from_json(read_json_file(f.string()), max_order)));
  for (const auto& f : sorted_files(fs::path(dir) / "crossed")) {
    const std::string name = f.stem().string();
    Json j = read_json_file(f.string());
    try {
      c.crossed.emplace(name, crossed_from_json(j, max_order));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      c.rejected.emplace_back(name, e.what());
    }
  }
  return c;
}

}  // namespace tworep::io
