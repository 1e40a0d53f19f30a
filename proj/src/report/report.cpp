#include "liftscope/report.hpp"

#include <iomanip>

namespace liftscope {

using nlohmann::json;

namespace {

json rational_or_null(const std::optional<Rational>& r) { return r ? json(to_string(*r)) : json(nullptr); }

std::string poly_x(const UniPoly& p) { return p.to_string("x"); }

}  // namespace

json to_json(const ActivityResult& a) {
  json j;
  j["M"] = a.M.get_str();
  j["active"] = a.active;
  if (a.active) {
    j["witness"] = to_string(a.witness);
    j["coset"] = to_string(a.lambda);
  } else {
    json cert = json::array();
    for (const CongruenceCheck& c : a.certificate) {
      cert.push_back({{"b", c.b.get_str()}, {"modulus", c.modulus.get_str()}, {"residuesChecked", c.residues_checked.get_str()}});
    }
    j["certificate"] = cert;
  }
  return j;
}

json to_json(const CensusSeries& s) {
  json j;
  j["checkpoints"] = s.checkpoints;
  j["counts"] = s.counts;
  if (s.fit) {
    j["slope"] = s.fit->slope;
    j["residual"] = s.fit->residual;
  } else {
    j["slope"] = nullptr;
  }
  return j;
}

json to_json(const LiftReport& r, const CensusSeries* census) {
  json j;
  j["input"] = {{"f", poly_x(r.f)}, {"g", r.g.to_string("y")}};
  json h = json::array();
  for (const UniPoly& p : r.H) h.push_back(poly_x(p));
  j["decompositions"] = h;
  json comps = json::array();
  for (const ComponentRecord& c : r.components) {
    json cj;
    cj["factor"] = c.F.to_string();
    cj["absFactors"] = c.abs_factors;
    cj["class"] = to_string(c.cls);
    cj["dX"] = c.cls == ComponentClass::OneInfinity ? json(c.dX) : json(nullptr);
    cj["active"] = c.activity ? json(c.activity->active) : json(nullptr);
    cj["witness"] = c.active() ? json(to_string(c.activity->witness)) : json(nullptr);
    cj["coset"] = c.active() ? json(to_string(c.activity->lambda)) : json(nullptr);
    if (!c.detail.empty()) cj["detail"] = c.detail;
    if (c.cls == ComponentClass::OneInfinity) {
      cj["param"] = {{"A", c.A().to_string("t")}, {"B", c.B().to_string("t")}};
      cj["provenance"] = c.provenance == Provenance::Certificate ? "certificate" : "builtin";
      cj["activity"] = to_json(*c.activity);
    }
    comps.push_back(cj);
  }
  j["components"] = comps;
  json zr = json::array();
  for (const Rational& z : r.collision.ZR) zr.push_back(to_string(z));
  j["collision"] = {{"R", poly_x(r.collision.R)}, {"ZR", zr}};
  j["theta"] = rational_or_null(r.theta);
  j["growth"] = predicted_growth(r);
  j["growthClass"] = to_string(r.growth);
  j["notes"] = r.notes;
  if (census) j["census"] = to_json(*census);
  return j;
}

void write_csv(std::ostream& os, const CensusSeries& s) {
  os << "B,count\n";
  for (std::size_t i = 0; i < s.checkpoints.size(); ++i) os << s.checkpoints[i] << ',' << s.counts[i] << '\n';
}

void write_text(std::ostream& os, const LiftReport& r) {
  os << "f(x) = " << poly_x(r.f) << "\n";
  os << "g(y) = " << r.g.to_string("y") << "\n\n";
  os << "graph components (" << r.H.size() << "):";
  if (r.H.empty()) os << " none";
  for (const UniPoly& h : r.H) os << "  y = " << poly_x(h);
  os << "\n\n";
  if (r.components.empty()) {
    os << "no non-graph components\n";
  } else {
    os << std::left << std::setw(34) << "component" << std::setw(15) << "class" << std::setw(5) << "d_X"
       << std::setw(9) << "active" << "parametrization / detail\n";
    for (const ComponentRecord& c : r.components) {
      std::string dx = c.cls == ComponentClass::OneInfinity ? std::to_string(c.dX) : "-";
      std::string act = c.activity ? (c.activity->active ? "yes" : "no") : "-";
      std::string info = c.detail;
      if (c.cls == ComponentClass::OneInfinity) {
        info = "X = " + c.A().to_string("t") + ", Y = " + c.B().to_string("t");
        if (c.active()) info += "; t0 = " + to_string(c.activity->witness) + ", lambda = " + to_string(c.activity->lambda);
        if (c.provenance == Provenance::Certificate) info += " (certificate)";
      }
      os << std::setw(34) << c.F.to_string() << std::setw(15) << to_string(c.cls) << std::setw(5) << dx
         << std::setw(9) << act << info << "\n";
    }
  }
  os << "\nR(x) = " << poly_x(r.collision.R) << "; rational zeros:";
  if (r.collision.ZR.empty()) os << " none";
  for (const Rational& z : r.collision.ZR) os << ' ' << to_string(z);
  os << "\ntheta = " << (r.theta ? to_string(*r.theta) : "none") << "\n";
  os << growth_explanation(r) << "\n";
  for (const std::string& n : r.notes) os << "note: " << n << "\n";
}

}  // namespace liftscope
