#include "poisonrl/dataset.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "poisonrl/errors.hpp"

namespace poisonrl {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& token, int line) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(token, &pos);
    if (pos != token.size()) throw ParseError("trailing characters in number '" + token + "'", line);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("malformed number '" + token + "'", line);
  }
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Eigen::VectorXd Dataset::rewards() const {
  Eigen::VectorXd r(size());
  if (kind == DatasetKind::kTabular) {
    for (int t = 0; t < size(); ++t) r(t) = tabular[t].r;
  } else {
    for (int t = 0; t < size(); ++t) r(t) = continuous[t].r;
  }
  return r;
}

Dataset Dataset::with_rewards(const Eigen::VectorXd& r) const {
  if (r.size() != size()) throw ArgumentError("reward vector length does not match dataset size");
  Dataset out = *this;
  if (kind == DatasetKind::kTabular) {
    for (int t = 0; t < size(); ++t) out.tabular[t].r = r(t);
  } else {
    for (int t = 0; t < size(); ++t) out.continuous[t].r = r(t);
  }
  return out;
}

int IndexSets::min_count() const {
  int lo = by_pair.empty() ? 0 : static_cast<int>(by_pair[0].size());
  for (const auto& v : by_pair) lo = std::min(lo, static_cast<int>(v.size()));
  return lo;
}

IndexSets build_index(const Dataset& dataset, int num_states, int num_actions) {
  if (dataset.kind != DatasetKind::kTabular) throw ArgumentError("build_index requires a tabular dataset");
  IndexSets idx;
  idx.num_states = num_states;
  idx.num_actions = num_actions;
  idx.by_pair.assign(static_cast<std::size_t>(num_states) * num_actions, {});
  for (int t = 0; t < dataset.size(); ++t) {
    const auto& item = dataset.tabular[t];
    if (item.s < 0 || item.s >= num_states || item.a < 0 || item.a >= num_actions)
      throw ArgumentError("dataset item out of range for the given state/action counts");
    idx.by_pair[item.s * num_actions + item.a].push_back(t);
  }
  return idx;
}

void write_dataset(const Dataset& dataset, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot open " + path + " for writing");
  if (ends_with(path, ".json")) {
    nlohmann::ordered_json j;
    j["kind"] = dataset.kind == DatasetKind::kTabular ? "tabular" : "continuous";
    if (dataset.kind == DatasetKind::kTabular) {
      j["items"] = nlohmann::ordered_json::array();
      for (const auto& it : dataset.tabular) {
        j["items"].push_back({{"s", dataset.state_names[it.s]},
                              {"a", dataset.action_names[it.a]},
                              {"r", it.r},
                              {"s_next", dataset.state_names[it.s_next]}});
      }
    } else {
      j["items"] = nlohmann::ordered_json::array();
      for (const auto& it : dataset.continuous) {
        j["items"].push_back({{"s", std::vector<double>(it.s.begin(), it.s.end())},
                              {"a", std::vector<double>(it.a.begin(), it.a.end())},
                              {"r", it.r},
                              {"s_next", std::vector<double>(it.s_next.begin(), it.s_next.end())}});
      }
    }
    out << j.dump(2) << "\n";
    return;
  }
  if (dataset.kind == DatasetKind::kTabular) {
    out << "state,action,reward,next_state\n";
    for (const auto& it : dataset.tabular) {
      out << dataset.state_names[it.s] << ',' << dataset.action_names[it.a] << ','
          << format_double(it.r) << ',' << dataset.state_names[it.s_next] << '\n';
    }
  } else {
    const int n = dataset.continuous.empty() ? 0 : static_cast<int>(dataset.continuous[0].s.size());
    const int m = dataset.continuous.empty() ? 0 : static_cast<int>(dataset.continuous[0].a.size());
    for (int i = 0; i < n; ++i) out << "s" << i << ',';
    for (int i = 0; i < m; ++i) out << "a" << i << ',';
    out << "reward";
    for (int i = 0; i < n; ++i) out << ",s_next" << i;
    out << '\n';
    for (const auto& it : dataset.continuous) {
      for (int i = 0; i < n; ++i) out << format_double(it.s(i)) << ',';
      for (int i = 0; i < m; ++i) out << format_double(it.a(i)) << ',';
      out << format_double(it.r);
      for (int i = 0; i < n; ++i) out << ',' << format_double(it.s_next(i));
      out << '\n';
    }
  }
}

namespace {

Dataset read_csv(std::ifstream& in) {
  Dataset ds;
  std::string line;
  int line_no = 1;
  if (!std::getline(in, line)) throw ParseError("missing header row", 1);
  auto header = split_csv(line);
  if (header.size() == 4 && header[0] == "state") {
    ds.kind = DatasetKind::kTabular;
    std::map<std::string, int> sid, aid;
    auto intern = [](std::map<std::string, int>& table, std::vector<std::string>& names,
                     const std::string& name) {
      auto it = table.find(name);
      if (it != table.end()) return it->second;
      const int id = static_cast<int>(names.size());
      table.emplace(name, id);
      names.push_back(name);
      return id;
    };
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      auto f = split_csv(line);
      if (f.size() != 4) throw ParseError("expected 4 fields", line_no);
      TabularItem item;
      item.s = intern(sid, ds.state_names, f[0]);
      item.a = intern(aid, ds.action_names, f[1]);
      item.r = parse_double(f[2], line_no);
      item.s_next = intern(sid, ds.state_names, f[3]);
      ds.tabular.push_back(item);
    }
    return ds;
  }
  // continuous schema: s0..s{n-1}, a0..a{m-1}, reward, s_next0..
  int n = 0, m = 0;
  std::size_t col = 0;
  while (col < header.size() && header[col] == "s" + std::to_string(n)) ++col, ++n;
  while (col < header.size() && header[col] == "a" + std::to_string(m)) ++col, ++m;
  if (n == 0 || m == 0 || col >= header.size() || header[col] != "reward")
    throw ParseError("unrecognized header", 1);
  ++col;
  for (int i = 0; i < n; ++i, ++col) {
    if (col >= header.size() || header[col] != "s_next" + std::to_string(i))
      throw ParseError("unrecognized header", 1);
  }
  if (col != header.size()) throw ParseError("unrecognized header", 1);
  ds.kind = DatasetKind::kContinuous;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto f = split_csv(line);
    if (static_cast<int>(f.size()) != 2 * n + m + 1)
      throw ParseError("expected " + std::to_string(2 * n + m + 1) + " fields", line_no);
    ContinuousItem item;
    item.s.resize(n);
    item.a.resize(m);
    item.s_next.resize(n);
    int k = 0;
    for (int i = 0; i < n; ++i) item.s(i) = parse_double(f[k++], line_no);
    for (int i = 0; i < m; ++i) item.a(i) = parse_double(f[k++], line_no);
    item.r = parse_double(f[k++], line_no);
    for (int i = 0; i < n; ++i) item.s_next(i) = parse_double(f[k++], line_no);
    ds.continuous.push_back(item);
  }
  return ds;
}

Dataset read_json(std::ifstream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  Dataset ds;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "tabular") {
    ds.kind = DatasetKind::kTabular;
    std::map<std::string, int> sid, aid;
    auto intern = [](std::map<std::string, int>& table, std::vector<std::string>& names,
                     const std::string& name) {
      auto it = table.find(name);
      if (it != table.end()) return it->second;
      const int id = static_cast<int>(names.size());
      table.emplace(name, id);
      names.push_back(name);
      return id;
    };
    for (const auto& e : j.at("items")) {
      TabularItem item;
      item.s = intern(sid, ds.state_names, e.at("s").get<std::string>());
      item.a = intern(aid, ds.action_names, e.at("a").get<std::string>());
      item.r = e.at("r").get<double>();
      item.s_next = intern(sid, ds.state_names, e.at("s_next").get<std::string>());
      ds.tabular.push_back(item);
    }
  } else if (kind == "continuous") {
    ds.kind = DatasetKind::kContinuous;
    for (const auto& e : j.at("items")) {
      ContinuousItem item;
      auto s = e.at("s").get<std::vector<double>>();
      auto a = e.at("a").get<std::vector<double>>();
      auto sn = e.at("s_next").get<std::vector<double>>();
      item.s = Eigen::Map<Eigen::VectorXd>(s.data(), s.size());
      item.a = Eigen::Map<Eigen::VectorXd>(a.data(), a.size());
      item.s_next = Eigen::Map<Eigen::VectorXd>(sn.data(), sn.size());
      item.r = e.at("r").get<double>();
      ds.continuous.push_back(item);
    }
  } else {
    throw ParseError("unknown dataset kind '" + kind + "'", 0);
  }
  return ds;
}

}  // namespace

Dataset read_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path);
  return ends_with(path, ".json") ? read_json(in) : read_csv(in);
}

}  // namespace poisonrl
