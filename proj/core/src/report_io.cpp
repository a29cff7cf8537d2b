// Copyright 2026 The mzi-qkd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mziqkd/report_io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace mziqkd {

std::string format_real(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                       std::chars_format::general, 17);
  if (ec != std::errc()) {
    throw std::logic_error("format_real: conversion failed");
  }
  return std::string(buf, ptr);
}

std::string verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::Clean: return "Clean";
    case Verdict::EavesdropperDetected: return "EavesdropperDetected";
    case Verdict::Aborted: return "Aborted";
  }
  throw std::logic_error("verdict_name: invalid verdict");
}

std::string source_name(SourceKind kind) {
  return kind == SourceKind::PsiPlus ? "psi+" : "psi-";
}

std::string attack_kind_name(AttackModel::Kind kind) {
  switch (kind) {
    case AttackModel::Kind::NoAttack: return "none";
    case AttackModel::Kind::InterceptResendCircular: return "intercept";
    case AttackModel::Kind::NastySendLinear: return "nasty";
    case AttackModel::Kind::PathBlock: return "block";
  }
  throw std::logic_error("attack_kind_name: invalid attack kind");
}

namespace {

std::string optional_real(const std::optional<double>& value) {
  return value.has_value() ? format_real(*value) : "null";
}

std::string attack_json(const AttackModel& attack) {
  std::ostringstream out;
  out << "{\"kind\": \"" << attack_kind_name(attack.kind()) << "\"";
  if (attack.kind() == AttackModel::Kind::NastySendLinear) {
    out << ", \"resend_axis\": " << format_real(attack.resend_axis().radians());
  }
  if (attack.kind() == AttackModel::Kind::PathBlock) {
    out << ", \"side\": \""
        << (attack.block_side() == BlockSide::Alice ? "alice" : "bob")
        << "\", \"path\": \""
        << (attack.block_path() == BlockPath::Upper ? "upper" : "lower")
        << "\"";
  }
  out << "}";
  return out.str();
}

}  // namespace

std::string to_json(const SessionReport& r) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"config\": {\"pairs\": " << r.config.n_pairs
      << ", \"attack\": " << attack_json(r.config.attack)
      << ", \"seed\": " << r.config.seed
      << ", \"sacrifice_fraction\": " << format_real(r.config.sacrifice_fraction)
      << ", \"abort_qber_threshold\": "
      << format_real(r.config.abort_qber_threshold)
      << ", \"source\": \"" << source_name(r.config.source) << "\"},\n";
  out << "  \"counts\": {\"vv\": " << r.count_vv << ", \"vu\": " << r.count_vu
      << ", \"uv\": " << r.count_uv << ", \"uu\": " << r.count_uu
      << ", \"lost\": " << r.loss_count << "},\n";
  out << "  \"linear_test\": {\"tested\": " << r.linear_test.tested
      << ", \"mismatches\": " << r.linear_test.mismatches
      << ", \"qber\": " << optional_real(r.linear_test.qber) << "},\n";
  out << "  \"circular_test\": {\"tested\": " << r.circular_test.tested
      << ", \"mismatches\": " << r.circular_test.mismatches
      << ", \"qber\": " << optional_real(r.circular_test.qber) << "},\n";
  out << "  \"key\": {\"length\": " << r.sifted_key_alice.size()
      << ", \"agreement_rate\": " << format_real(r.key_agreement_rate)
      << "},\n";
  out << "  \"eve\": {\"present\": "
      << (r.config.attack.eve_measures() ? "true" : "false")
      << ", \"knowledge_rate\": " << optional_real(r.eve_knowledge_rate)
      << "},\n";
  out << "  \"verdict\": \"" << verdict_name(r.verdict) << "\"\n";
  out << "}\n";
  return out.str();
}

std::string to_csv(const SessionReport& r) {
  std::ostringstream out;
  out << "pairs,attack,resend_axis,block_side,block_path,seed,"
         "sacrifice_fraction,abort_qber_threshold,source,"
         "vv,vu,uv,uu,lost,"
         "linear_tested,linear_mismatches,linear_qber,"
         "circular_tested,circular_mismatches,circular_qber,"
         "key_length,key_agreement_rate,eve_present,eve_knowledge_rate,"
         "verdict\n";
  const AttackModel& a = r.config.attack;
  out << r.config.n_pairs << ',' << attack_kind_name(a.kind()) << ',';
  if (a.kind() == AttackModel::Kind::NastySendLinear) {
    out << format_real(a.resend_axis().radians());
  }
  out << ',';
  if (a.kind() == AttackModel::Kind::PathBlock) {
    out << (a.block_side() == BlockSide::Alice ? "alice" : "bob");
  }
  out << ',';
  if (a.kind() == AttackModel::Kind::PathBlock) {
    out << (a.block_path() == BlockPath::Upper ? "upper" : "lower");
  }
  out << ',' << r.config.seed << ','
      << format_real(r.config.sacrifice_fraction) << ','
      << format_real(r.config.abort_qber_threshold) << ','
      << source_name(r.config.source) << ',' << r.count_vv << ','
      << r.count_vu << ',' << r.count_uv << ',' << r.count_uu << ','
      << r.loss_count << ',' << r.linear_test.tested << ','
      << r.linear_test.mismatches << ','
      << (r.linear_test.qber ? format_real(*r.linear_test.qber) : "") << ','
      << r.circular_test.tested << ',' << r.circular_test.mismatches << ','
      << (r.circular_test.qber ? format_real(*r.circular_test.qber) : "")
      << ',' << r.sifted_key_alice.size() << ','
      << format_real(r.key_agreement_rate) << ','
      << (a.eve_measures() ? "true" : "false") << ','
      << (r.eve_knowledge_rate ? format_real(*r.eve_knowledge_rate) : "")
      << ',' << verdict_name(r.verdict) << '\n';
  return out.str();
}

std::string to_human(const SessionReport& r) {
  std::ostringstream out;
  out << "session report\n";
  out << "  pairs:          " << r.config.n_pairs << "\n";
  out << "  attack:         " << attack_kind_name(r.config.attack.kind());
  if (r.config.attack.kind() == AttackModel::Kind::NastySendLinear) {
    out << " (resend axis " << format_real(r.config.attack.resend_axis().radians())
        << " rad)";
  }
  if (r.config.attack.kind() == AttackModel::Kind::PathBlock) {
    out << " ("
        << (r.config.attack.block_side() == BlockSide::Alice ? "alice" : "bob")
        << " "
        << (r.config.attack.block_path() == BlockPath::Upper ? "upper" : "lower")
        << " path)";
  }
  out << "\n";
  out << "  seed:           " << r.config.seed << "\n";
  out << "  source:         " << source_name(r.config.source) << "\n";
  out << "  counts:         vv=" << r.count_vv << " vu=" << r.count_vu
      << " uv=" << r.count_uv << " uu=" << r.count_uu
      << " lost=" << r.loss_count << "\n";
  out << "  linear test:    tested=" << r.linear_test.tested
      << " mismatches=" << r.linear_test.mismatches << " qber="
      << (r.linear_test.qber ? format_real(*r.linear_test.qber) : "undefined")
      << "\n";
  out << "  circular test:  tested=" << r.circular_test.tested
      << " mismatches=" << r.circular_test.mismatches << " qber="
      << (r.circular_test.qber ? format_real(*r.circular_test.qber)
                               : "undefined")
      << "\n";
  out << "  key:            length=" << r.sifted_key_alice.size()
      << " agreement=" << format_real(r.key_agreement_rate) << "\n";
  out << "  eve:            ";
  if (r.eve_knowledge_rate.has_value()) {
    out << "measured, knows " << format_real(*r.eve_knowledge_rate)
        << " of key rounds\n";
  } else {
    out << "no measurement record\n";
  }
  out << "  verdict:        " << verdict_name(r.verdict) << "\n";
  return out.str();
}

std::string to_json(const std::vector<BasisMapping>& mapping) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    if (i > 0) out << ", ";
    out << "{\"measurement\": \"" << mapping[i].measurement
        << "\", \"pauli_analog\": \"" << mapping[i].pauli_analog << "\"}";
  }
  out << "]";
  return out.str();
}

}  // namespace mziqkd
