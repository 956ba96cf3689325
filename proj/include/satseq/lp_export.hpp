#pragma once

// Deterministic LP-file writer for the Sat(n, u) program. The output follows
// the common LP text conventions (objective, constraint rows, bounds for the
// fixed anchors, a Binaries section and an End marker) so the model can be
// cross-checked with external solvers.

#include <string>

#include "satseq/ilp.hpp"

namespace satseq {

namespace detail {

class LpWriter {
 public:
  explicit LpWriter(const IlpModel& m) : m_(m) {}

  std::string write() {
    out_.clear();
    out_ += "\\ Sat(n,u) 0-1 program: n=" + std::to_string(m_.n) +
            " N=" + std::to_string(m_.N) + " pattern=" + m_.u.str() + "\n";
    out_ += "\\ variables: " + std::to_string(m_.var_count()) +
            "  constraints: " + std::to_string(m_.constraint_count()) + "\n";
    out_ += "Minimize\n obj:";
    line_len_ = 5;
    for (int i = 1; i <= m_.n; ++i)
      for (int j = 1; j <= m_.N; ++j) token((i == 1 && j == 1 ? " " : " + ") + x_name(i, j));
    out_ += "\nSubject To\n";
    m_.for_each_constraint([&](const LinConstraint& c) {
      if (c.sense == Sense::EQ) return;  // anchors go to the Bounds section
      out_ += " " + c.name + ":";
      line_len_ = c.name.size() + 2;
      bool first = true;
      for (const LinTerm& t : c.terms) {
        token(term_text(t, first));
        first = false;
      }
      switch (c.sense) {
        case Sense::LE: token(" <= " + std::to_string(c.rhs)); break;
        case Sense::GE: token(" >= " + std::to_string(c.rhs)); break;
        case Sense::EQ: break;
      }
      out_ += "\n";
    });
    out_ += "Bounds\n";
    m_.for_each_constraint([&](const LinConstraint& c) {
      if (c.sense != Sense::EQ) return;
      out_ += " " + m_.var_name(c.terms[0].var) + " = " + std::to_string(c.rhs) + "\n";
    });
    out_ += "Binaries\n";
    line_len_ = 0;
    for (int v = 0; v < m_.var_count(); ++v) token(" " + m_.var_name(v));
    out_ += "\nEnd\n";
    return out_;
  }

 private:
  std::string x_name(int i, int j) const { return m_.var_name(m_.x_var(i, j)); }

  std::string term_text(const LinTerm& t, bool first) const {
    std::string s;
    long long c = t.coef;
    if (c < 0) {
      s = " - ";
      c = -c;
    } else {
      s = first ? " " : " + ";
    }
    if (c != 1) s += std::to_string(c) + " ";
    return s + m_.var_name(t.var);
  }

  void token(const std::string& tok) {
    if (line_len_ + tok.size() > 200) {
      out_ += "\n ";
      line_len_ = 1;
    }
    out_ += tok;
    line_len_ += tok.size();
  }

  const IlpModel& m_;
  std::string out_;
  size_t line_len_ = 0;
};

}  // namespace detail

inline std::string export_lp(const IlpModel& model) { return detail::LpWriter(model).write(); }

}  // namespace satseq
