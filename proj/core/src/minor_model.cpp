#include "k2l/minor_model.hpp"

#include <sstream>

namespace k2l {

namespace {

bool in_range(const Graph& g, const VertexSet& s) {
  return s.empty() || (s.min() >= 0 && s.ids().back() < g.vertex_count());
}

bool has_edge_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (Vertex u : a)
    for (Vertex v : g.neighbors(u))
      if (b.contains(v)) return true;
  return false;
}

}  // namespace

VerifyResult verify_model(const Graph& g, const MinorModel& model) {
  auto fail = [](std::string why) { return VerifyResult{false, std::move(why)}; };

  if (model.ell < 1) return fail("ell must be >= 1");
  if (static_cast<int>(model.legs.size()) != model.ell)
    return fail("leg count " + std::to_string(model.legs.size()) +
                " does not match ell " + std::to_string(model.ell));

  std::vector<std::pair<std::string, const VertexSet*>> sets;
  sets.emplace_back("side_a", &model.side_a);
  sets.emplace_back("side_b", &model.side_b);
  for (int i = 0; i < model.ell; ++i)
    sets.emplace_back("leg " + std::to_string(i + 1), &model.legs[i]);

  for (auto& [name, s] : sets) {
    if (s->empty()) return fail("empty set: " + name);
    if (!in_range(g, *s)) return fail("vertex out of range in " + name);
  }
  for (size_t i = 0; i < sets.size(); ++i)
    for (size_t j = i + 1; j < sets.size(); ++j)
      if (sets[i].second->intersects(*sets[j].second))
        return fail("overlap: " + sets[i].first + "/" + sets[j].first);
  for (auto& [name, s] : sets)
    if (!induces_connected(g, *s)) return fail("disconnected set: " + name);
  for (int i = 0; i < model.ell; ++i) {
    if (!has_edge_between(g, model.side_a, model.legs[i]))
      return fail("missing edge side_a/leg " + std::to_string(i + 1));
    if (!has_edge_between(g, model.side_b, model.legs[i]))
      return fail("missing edge side_b/leg " + std::to_string(i + 1));
  }
  return {true, ""};
}

void write_certificate(std::ostream& out, const MinorModel& model) {
  out << "ell " << model.ell << '\n';
  auto line = [&out](const std::string& tag, const VertexSet& s) {
    out << tag << ':';
    for (Vertex v : s) out << ' ' << v;
    out << '\n';
  };
  line("A", model.side_a);
  line("B", model.side_b);
  for (int i = 0; i < model.ell; ++i)
    line("L" + std::to_string(i + 1), model.legs[i]);
}

std::string certificate_to_string(const MinorModel& model) {
  std::ostringstream os;
  write_certificate(os, model);
  return os.str();
}

MinorModel read_certificate(std::istream& in) {
  auto next_line = [&in](std::string& line) {
    while (std::getline(in, line)) {
      size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos || line[i] == '#') continue;
      return true;
    }
    return false;
  };
  std::string line;
  if (!next_line(line)) throw FormatError("empty certificate");
  std::istringstream head(line);
  std::string tag;
  int ell = 0;
  if (!(head >> tag >> ell) || tag != "ell" || ell < 1)
    throw FormatError("expected 'ell <k>', got: " + line);

  MinorModel model;
  model.ell = ell;
  auto read_set = [&](const std::string& want) {
    if (!next_line(line)) throw FormatError("certificate truncated before " + want);
    std::istringstream ls(line);
    std::string got;
    ls >> got;
    if (got != want + ":")
      throw FormatError("expected '" + want + ":', got: " + line);
    std::vector<Vertex> ids;
    Vertex v;
    while (ls >> v) ids.push_back(v);
    return VertexSet(std::move(ids));
  };
  model.side_a = read_set("A");
  model.side_b = read_set("B");
  for (int i = 0; i < ell; ++i)
    model.legs.push_back(read_set("L" + std::to_string(i + 1)));
  return model;
}

}  // namespace k2l
