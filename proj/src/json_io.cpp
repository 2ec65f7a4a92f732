#include "oran/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "oran/errors.hpp"

namespace oran {

using nlohmann::json;

namespace {

json point_to_json(const Point& p) { return json::array({p.x, p.y}); }

Point point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw SchemaError("schema-error: point must be [x, y]");
  return Point{j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const std::vector<std::vector<double>>& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (double v : row) {
      if (std::isinf(v))
        r.push_back(nullptr);  // unconnected pairs
      else
        r.push_back(v);
    }
    out.push_back(r);
  }
  return out;
}

std::vector<std::vector<double>> matrix_from_json(const json& j) {
  std::vector<std::vector<double>> out;
  for (const auto& row : j) {
    std::vector<double> r;
    for (const auto& v : row)
      r.push_back(v.is_null() ? std::numeric_limits<double>::infinity()
                              : v.get<double>());
    out.push_back(r);
  }
  return out;
}

const char* cell_name(CellType c) {
  return c == CellType::Macro ? "macro" : "small";
}
const char* service_name(ServiceClass s) {
  return s == ServiceClass::Urllc ? "urllc" : "embb";
}
const char* kind_name(CloudKind k) { return k == CloudKind::Edge ? "edge" : "olt"; }

template <typename T>
T enum_from(const std::string& s, const char* a, T va, const char* b, T vb,
            const char* what) {
  if (s == a) return va;
  if (s == b) return vb;
  throw SchemaError(std::string("schema-error: bad ") + what + " '" + s + "'");
}

}  // namespace

json topology_to_json(const Topology& topo) {
  json j;
  j["theta_tti_s"] = topo.theta_tti_s;
  j["n_mnos"] = topo.n_mnos;
  j["co_positions"] = json::array();
  for (const auto& p : topo.co_positions) j["co_positions"].push_back(point_to_json(p));

  j["rus"] = json::array();
  for (const auto& ru : topo.rus) {
    json r;
    r["id"] = ru.id;
    r["mno"] = ru.mno;
    r["pos"] = point_to_json(ru.pos);
    r["cell"] = cell_name(ru.cell);
    r["service"] = service_name(ru.service);
    r["w_ul"] = ru.w_ul;
    r["w_dl"] = ru.w_dl;
    r["gops_ul"] = ru.gops_ul;
    r["gops_dl"] = ru.gops_dl;
    r["eta_ul"] = ru.eta_ul;
    r["eta_dl"] = ru.eta_dl;
    r["h_ul"] = ru.h_ul;
    r["h_dl"] = ru.h_dl;
    r["delta_h_s"] = ru.delta_h;
    r["delta_rdc_s"] = ru.delta_rdc;
    r["default_cost"] = ru.default_cost;
    j["rus"].push_back(r);
  }

  j["clouds"] = json::array();
  for (const auto& c : topo.clouds) {
    json s;
    s["id"] = c.id;
    s["kind"] = kind_name(c.kind);
    s["pos"] = point_to_json(c.pos);
    s["b_ul"] = c.b_ul;
    s["b_dl"] = c.b_dl;
    s["g_ul"] = c.g_ul;
    s["g_dl"] = c.g_dl;
    s["burst_interval_s"] = c.burst_interval_s;
    s["owner_mno"] = c.owner_mno;
    s["level1"] = c.level1;
    s["co"] = c.co;
    j["clouds"].push_back(s);
  }

  j["level1"] = json::array();
  for (const auto& sp : topo.level1)
    j["level1"].push_back({{"pos", point_to_json(sp.pos)}, {"members", sp.members}});
  j["level2"] = json::array();
  for (const auto& sp : topo.level2)
    j["level2"].push_back({{"pos", point_to_json(sp.pos)}, {"members", sp.members}});
  j["ru_level1"] = topo.ru_level1;
  j["ru_co"] = topo.ru_co;
  j["z"] = topo.z;
  j["dist_km"] = matrix_to_json(topo.dist_km);
  j["queue_delay_s"] = matrix_to_json(topo.queue_delay_s);
  return j;
}

Topology topology_from_json(const json& j) {
  Topology topo;
  try {
    topo.theta_tti_s = j.at("theta_tti_s").get<double>();
    topo.n_mnos = j.at("n_mnos").get<int>();
    for (const auto& p : j.at("co_positions")) topo.co_positions.push_back(point_from_json(p));

    for (const auto& r : j.at("rus")) {
      RadioUnit ru;
      ru.id = r.at("id").get<int>();
      ru.mno = r.at("mno").get<int>();
      ru.pos = point_from_json(r.at("pos"));
      ru.cell = enum_from(r.at("cell").get<std::string>(), "macro",
                          CellType::Macro, "small", CellType::Small, "cell");
      ru.service = enum_from(r.at("service").get<std::string>(), "urllc",
                             ServiceClass::Urllc, "embb", ServiceClass::Embb,
                             "service");
      ru.w_ul = r.at("w_ul").get<double>();
      ru.w_dl = r.at("w_dl").get<double>();
      ru.gops_ul = r.at("gops_ul").get<double>();
      ru.gops_dl = r.at("gops_dl").get<double>();
      ru.eta_ul = r.at("eta_ul").get<double>();
      ru.eta_dl = r.at("eta_dl").get<double>();
      ru.h_ul = r.at("h_ul").get<double>();
      ru.h_dl = r.at("h_dl").get<double>();
      ru.delta_h = r.at("delta_h_s").get<double>();
      ru.delta_rdc = r.at("delta_rdc_s").get<double>();
      ru.default_cost = r.at("default_cost").get<double>();
      topo.rus.push_back(ru);
    }

    for (const auto& s : j.at("clouds")) {
      CloudSite c;
      c.id = s.at("id").get<int>();
      c.kind = enum_from(s.at("kind").get<std::string>(), "edge",
                         CloudKind::Edge, "olt", CloudKind::Olt, "kind");
      c.pos = point_from_json(s.at("pos"));
      c.b_ul = s.at("b_ul").get<double>();
      c.b_dl = s.at("b_dl").get<double>();
      c.g_ul = s.at("g_ul").get<double>();
      c.g_dl = s.at("g_dl").get<double>();
      c.burst_interval_s = s.at("burst_interval_s").get<double>();
      c.owner_mno = s.at("owner_mno").get<int>();
      c.level1 = s.at("level1").get<int>();
      c.co = s.at("co").get<int>();
      topo.clouds.push_back(c);
    }

    for (const auto& sp : j.at("level1")) {
      Splitter s;
      s.pos = point_from_json(sp.at("pos"));
      s.members = sp.at("members").get<std::vector<int>>();
      topo.level1.push_back(s);
    }
    for (const auto& sp : j.at("level2")) {
      Splitter s;
      s.pos = point_from_json(sp.at("pos"));
      s.members = sp.at("members").get<std::vector<int>>();
      topo.level2.push_back(s);
    }
    topo.ru_level1 = j.at("ru_level1").get<std::vector<int>>();
    topo.ru_co = j.at("ru_co").get<std::vector<int>>();
    topo.z = j.at("z").get<std::vector<std::vector<std::uint8_t>>>();
    topo.dist_km = matrix_from_json(j.at("dist_km"));
    topo.queue_delay_s = matrix_from_json(j.at("queue_delay_s"));
  } catch (const json::exception& e) {
    throw SchemaError(std::string("schema-error: ") + e.what());
  }

  const auto nr = topo.rus.size();
  const auto ny = topo.clouds.size();
  auto shape_ok = [&](const auto& m) {
    if (m.size() != nr) return false;
    for (const auto& row : m)
      if (row.size() != ny) return false;
    return true;
  };
  if (!shape_ok(topo.z) || !shape_ok(topo.dist_km) || !shape_ok(topo.queue_delay_s))
    throw SchemaError("schema-error: z/dist/queue matrices must be |R| x |Y|");
  if (topo.ru_level1.size() != nr || topo.ru_co.size() != nr)
    throw SchemaError("schema-error: ru_level1/ru_co must have one entry per RU");
  for (std::size_t i = 0; i < nr; ++i)
    if (topo.rus[i].id != static_cast<int>(i))
      throw SchemaError("schema-error: RU ids must be dense 0..|R|-1");
  for (std::size_t i = 0; i < ny; ++i)
    if (topo.clouds[i].id != static_cast<int>(i))
      throw SchemaError("schema-error: cloud ids must be dense 0..|Y|-1");
  return topo;
}

Topology load_topology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("parse-error: cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("parse-error: ") + e.what());
  }
  return topology_from_json(j);
}

json assignment_to_json(const Topology& topo, const Demands& dem,
                        const CostModel& cost, const Assignment& asg,
                        Sharing sharing) {
  json sites = json::object();
  json opex = json::object();
  json share_b = json::object();
  json share_g = json::object();
  const double eps = sharing == Sharing::Proportional ? kShareEpsilon : 0.0;
  for (int r = 0; r < topo.n_rus(); ++r) {
    const std::string key = std::to_string(r);
    const int y = asg.site_of(r);
    sites[key] = y;
    opex[key] = ru_opex(topo, dem, asg, cost, r, sharing, eps);
    if (y >= 0) {
      share_b[key] = share_throughput(topo, dem, asg, r, y, sharing, eps);
      share_g[key] = share_gops(topo, dem, asg, r, y, sharing, eps);
    }
  }
  json j;
  j["sites"] = sites;
  j["opex"] = opex;
  j["share_throughput_bps"] = share_b;
  j["share_gops"] = share_g;
  j["active_sites"] = asg.active_sites();
  j["n_assigned"] = asg.n_assigned();
  return j;
}

}  // namespace oran
