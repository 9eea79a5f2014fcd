#include "linhyp/certificate.hpp"

namespace linhyp {

namespace {
const Witness& find_witness(const Certificate& c, const std::string& name) {
  auto it = c.witnesses.find(name);
  if (it == c.witnesses.end()) throw error("certificate is missing witness " + name);
  return it->second;
}
}  // namespace

const Polynomial& Certificate::poly(const std::string& name) const {
  return std::get<Polynomial>(find_witness(*this, name));
}

const PlanarAutomorphism& Certificate::automorphism(const std::string& name) const {
  return std::get<PlanarAutomorphism>(find_witness(*this, name));
}

const std::vector<Polynomial>& Certificate::poly_list(const std::string& name) const {
  return std::get<std::vector<Polynomial>>(find_witness(*this, name));
}

const std::string& Certificate::label(const std::string& name) const {
  return std::get<std::string>(find_witness(*this, name));
}

long long Certificate::integer(const std::string& name) const {
  return std::get<long long>(find_witness(*this, name));
}

bool Certificate::all_premises_hold() const {
  for (const auto& p : premises)
    if (p.status == Premise::Status::failed) return false;
  return true;
}

}  // namespace linhyp
