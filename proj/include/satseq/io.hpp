#pragma once

// CSV and SVG emitters. The SVG scatter encodes exactly the (position,
// letter) point set of a sequence, dots only, so figure comparisons reduce to
// set equality on parsed coordinates.

#include <string>

#include "satseq/core.hpp"
#include "satseq/saturation.hpp"

namespace satseq {

inline std::string scan_csv(const ScanResult& scan) {
  std::string out = "n,length,delta,prefix_ok\n";
  for (const ScanRecord& r : scan.records) {
    out += std::to_string(r.n) + "," + std::to_string(r.length) + "," +
           std::to_string(r.delta) + "," + (r.prefix_ok ? "true" : "false") + "\n";
  }
  return out;
}

inline std::string svg_scatter(const Seq& s) {
  constexpr int kStep = 12, kMargin = 24, kRadius = 3;
  const int rows = std::max(1, s.alphabet);
  const int width = 2 * kMargin + kStep * std::max(1, s.size() - 1);
  const int height = 2 * kMargin + kStep * (rows - 1);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) + "\">\n";
  for (int i = 0; i < s.size(); ++i) {
    int cx = kMargin + kStep * i;
    int cy = height - kMargin - kStep * (s.letters[i] - 1);
    out += "  <circle cx=\"" + std::to_string(cx) + "\" cy=\"" + std::to_string(cy) +
           "\" r=\"" + std::to_string(kRadius) + "\" data-pos=\"" + std::to_string(i + 1) +
           "\" data-letter=\"" + std::to_string(s.letters[i]) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace satseq
