#include "prothx/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace prothx {

namespace {

using json = nlohmann::ordered_json;

std::string reason_name(InapplicableReason reason) {
  switch (reason) {
    case InapplicableReason::NotProthForm: return "not_proth_form";
    case InapplicableReason::OutsideCubeRegime: return "outside_cube_regime";
    case InapplicableReason::OutsideClassicRegime: return "outside_classic_regime";
    case InapplicableReason::WitnessExhausted: return "witness_exhausted";
  }
  throw std::logic_error("unknown inapplicable reason");
}

InapplicableReason reason_from_name(const std::string& name) {
  if (name == "not_proth_form") return InapplicableReason::NotProthForm;
  if (name == "outside_cube_regime") return InapplicableReason::OutsideCubeRegime;
  if (name == "outside_classic_regime") return InapplicableReason::OutsideClassicRegime;
  if (name == "witness_exhausted") return InapplicableReason::WitnessExhausted;
  throw std::invalid_argument("unknown inapplicable reason: " + name);
}

std::string condition_name(BlsCondition condition) {
  switch (condition) {
    case BlsCondition::SizeBound: return "size_bound";
    case BlsCondition::FermatCondition: return "fermat";
    case BlsCondition::OrderCondition: return "order";
  }
  throw std::logic_error("unknown bls condition");
}

BlsCondition condition_from_name(const std::string& name) {
  if (name == "size_bound") return BlsCondition::SizeBound;
  if (name == "fermat") return BlsCondition::FermatCondition;
  if (name == "order") return BlsCondition::OrderCondition;
  throw std::invalid_argument("unknown bls condition: " + name);
}

json evidence_to_json(const CompositeEvidence& evidence) {
  json out;
  if (const auto* ew = std::get_if<EulerWitness>(&evidence)) {
    out["type"] = "euler_witness";
    out["base"] = to_decimal(ew->base);
    out["residue"] = to_decimal(ew->residue);
  } else if (const auto* fp = std::get_if<FactorPair>(&evidence)) {
    out["type"] = "factor_pair";
    out["p"] = to_decimal(fp->p);
    out["q"] = to_decimal(fp->q);
  } else if (const auto* sf = std::get_if<SharedFactor>(&evidence)) {
    out["type"] = "shared_factor";
    out["factor"] = to_decimal(sf->factor);
  } else if (const auto* ps = std::get_if<PerfectSquare>(&evidence)) {
    out["type"] = "perfect_square";
    out["root"] = to_decimal(ps->root);
  } else {
    throw std::logic_error("unknown evidence alternative");
  }
  return out;
}

CompositeEvidence evidence_from_json(const json& in) {
  const std::string type = in.at("type").get<std::string>();
  if (type == "euler_witness")
    return EulerWitness{Natural(in.at("base").get<std::string>()),
                        Natural(in.at("residue").get<std::string>())};
  if (type == "factor_pair")
    return FactorPair{Natural(in.at("p").get<std::string>()),
                      Natural(in.at("q").get<std::string>())};
  if (type == "shared_factor")
    return SharedFactor{Natural(in.at("factor").get<std::string>())};
  if (type == "perfect_square")
    return PerfectSquare{Natural(in.at("root").get<std::string>())};
  throw std::invalid_argument("unknown evidence type: " + type);
}

json verdict_to_json(const Verdict& verdict) {
  json out;
  switch (verdict.kind) {
    case VerdictKind::Prime:
      out["kind"] = "prime";
      if (verdict.witness) out["witness"] = to_decimal(*verdict.witness);
      break;
    case VerdictKind::Composite:
      out["kind"] = "composite";
      if (verdict.witness) out["witness"] = to_decimal(*verdict.witness);
      if (verdict.evidence) out["evidence"] = evidence_to_json(*verdict.evidence);
      break;
    case VerdictKind::Inapplicable:
      out["kind"] = "inapplicable";
      out["reason"] = reason_name(verdict.reason.value());
      break;
  }
  return out;
}

Verdict verdict_from_json(const json& in) {
  const std::string kind = in.at("kind").get<std::string>();
  if (kind == "prime") {
    std::optional<Natural> witness;
    if (in.contains("witness")) witness = Natural(in.at("witness").get<std::string>());
    return Verdict{VerdictKind::Prime, witness, std::nullopt, std::nullopt};
  }
  if (kind == "composite") {
    std::optional<Natural> witness;
    if (in.contains("witness")) witness = Natural(in.at("witness").get<std::string>());
    std::optional<CompositeEvidence> evidence;
    if (in.contains("evidence")) evidence = evidence_from_json(in.at("evidence"));
    return Verdict{VerdictKind::Composite, witness, evidence, std::nullopt};
  }
  if (kind == "inapplicable")
    return Verdict{VerdictKind::Inapplicable, std::nullopt, std::nullopt,
                   reason_from_name(in.at("reason").get<std::string>())};
  throw std::invalid_argument("unknown verdict kind: " + kind);
}

json bls_verdict_to_json(const BlsReportData& bls) {
  json out;
  if (bls.outcome.kind == BlsOutcome::Kind::Prime) {
    out["kind"] = "prime";
    if (bls.base) out["witness"] = to_decimal(*bls.base);
  } else {
    out["kind"] = "inconclusive";
    if (bls.outcome.failed) out["failed_condition"] = condition_name(*bls.outcome.failed);
  }
  return out;
}

std::string human_verdict(const Verdict& verdict) {
  std::ostringstream out;
  switch (verdict.kind) {
    case VerdictKind::Prime:
      out << "prime";
      if (verdict.witness) out << " (witness " << to_decimal(*verdict.witness) << ")";
      break;
    case VerdictKind::Composite: {
      out << "composite";
      if (!verdict.evidence) break;
      if (const auto* ew = std::get_if<EulerWitness>(&*verdict.evidence))
        out << " (euler witness: base " << to_decimal(ew->base) << ", residue "
            << to_decimal(ew->residue) << ")";
      else if (const auto* fp = std::get_if<FactorPair>(&*verdict.evidence))
        out << " (" << to_decimal(fp->p) << " * " << to_decimal(fp->q) << ")";
      else if (const auto* sf = std::get_if<SharedFactor>(&*verdict.evidence))
        out << " (shared factor " << to_decimal(sf->factor) << ")";
      else if (const auto* ps = std::get_if<PerfectSquare>(&*verdict.evidence))
        out << " (square of " << to_decimal(ps->root) << ")";
      break;
    }
    case VerdictKind::Inapplicable:
      switch (verdict.reason.value()) {
        case InapplicableReason::NotProthForm:
          out << "inapplicable (not of the form k * 2^n + 1 with odd k)";
          break;
        case InapplicableReason::OutsideCubeRegime:
          out << "inapplicable (2^n too small: need 2^(3n) > N)";
          break;
        case InapplicableReason::OutsideClassicRegime:
          out << "inapplicable (2^n too small: need 2^n > k)";
          break;
        case InapplicableReason::WitnessExhausted:
          out << "inapplicable (no witness found below cap)";
          break;
      }
      break;
  }
  return out.str();
}

}  // namespace

std::string to_json_line(const Report& report) {
  json out;
  out["input"] = to_decimal(report.input);
  if (report.form) {
    out["k"] = to_decimal(report.form->k);
    out["n"] = report.form->n;
  }
  if (report.regime) {
    out["regime"] = {{"cube_ok", report.regime->cube_ok},
                     {"square_ok", report.regime->square_ok},
                     {"classic_ok", report.regime->classic_ok}};
  }
  if (report.bls) {
    out["bls"] = {{"m", to_decimal(report.bls->m)},
                  {"p", to_decimal(report.bls->p)},
                  {"z", report.bls->z},
                  {"p_verified", report.bls->p_verified}};
    if (report.bls->bases_tried) out["bls"]["bases_tried"] = *report.bls->bases_tried;
    out["verdict"] = bls_verdict_to_json(*report.bls);
  } else if (report.verdict) {
    out["verdict"] = verdict_to_json(*report.verdict);
  }
  out["test_used"] = report.test_used;
  out["elapsed_us"] = report.elapsed_us;
  return out.dump();
}

std::string to_human_line(const Report& report) {
  std::ostringstream out;
  out << to_decimal(report.input);
  if (report.bls) {
    out << " = " << to_decimal(report.bls->m) << " * " << to_decimal(report.bls->p)
        << "^" << report.bls->z << " + 1: ";
    if (report.bls->outcome.kind == BlsOutcome::Kind::Prime) {
      out << "prime";
      if (report.bls->base) out << " (base " << to_decimal(*report.bls->base) << ")";
    } else {
      out << "inconclusive";
      if (report.bls->outcome.failed) {
        switch (*report.bls->outcome.failed) {
          case BlsCondition::SizeBound: out << " (size bound not met)"; break;
          case BlsCondition::FermatCondition: out << " (fermat condition failed)"; break;
          case BlsCondition::OrderCondition: out << " (order condition failed)"; break;
        }
      } else {
        out << " (no base tried)";
      }
    }
    if (!report.bls->p_verified) out << " [p assumed prime]";
    return out.str();
  }
  if (report.form)
    out << " = " << to_decimal(report.form->k) << " * 2^" << report.form->n << " + 1";
  out << ": ";
  if (report.verdict)
    out << human_verdict(*report.verdict);
  else
    out << "no verdict";
  return out.str();
}

Report parse_json_line(const std::string& line) {
  json in;
  try {
    in = json::parse(line);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(std::string("bad report line: ") + err.what());
  }
  try {
    Report report;
    report.input = Natural(in.at("input").get<std::string>());
    if (in.contains("k")) {
      ProthForm form;
      form.N = report.input;
      form.k = Natural(in.at("k").get<std::string>());
      form.n = in.at("n").get<unsigned long>();
      report.form = form;
    }
    if (in.contains("regime")) {
      const json& r = in.at("regime");
      report.regime = RegimeCheck{r.at("cube_ok").get<bool>(),
                                  r.at("square_ok").get<bool>(),
                                  r.at("classic_ok").get<bool>()};
    }
    if (in.contains("bls")) {
      const json& b = in.at("bls");
      BlsReportData data;
      data.m = Natural(b.at("m").get<std::string>());
      data.p = Natural(b.at("p").get<std::string>());
      data.z = b.at("z").get<unsigned long>();
      data.p_verified = b.at("p_verified").get<bool>();
      if (b.contains("bases_tried")) data.bases_tried = b.at("bases_tried").get<unsigned long>();
      const json& v = in.at("verdict");
      if (v.at("kind").get<std::string>() == "prime") {
        data.outcome = BlsOutcome{BlsOutcome::Kind::Prime, std::nullopt};
        if (v.contains("witness")) data.base = Natural(v.at("witness").get<std::string>());
      } else {
        std::optional<BlsCondition> failed;
        if (v.contains("failed_condition"))
          failed = condition_from_name(v.at("failed_condition").get<std::string>());
        data.outcome = BlsOutcome{BlsOutcome::Kind::Inconclusive, failed};
      }
      report.bls = data;
    } else if (in.contains("verdict")) {
      report.verdict = verdict_from_json(in.at("verdict"));
    }
    report.test_used = in.at("test_used").get<std::string>();
    report.elapsed_us = in.at("elapsed_us").get<std::int64_t>();
    return report;
  } catch (const json::exception& err) {
    throw std::invalid_argument(std::string("bad report line: ") + err.what());
  }
}

}  // namespace prothx
