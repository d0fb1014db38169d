#include "sppkit/diagram.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace sppkit {

namespace {

constexpr std::array<std::string_view, 4> kHexColors = {"#000000", "#FF0000", "#FFA500",
                                                        "#FFFF00"};

std::string_view hex_color(std::uint32_t count) { return kHexColors[count]; }

// nearest 8-color equivalents; orange keeps a red foreground on yellow so
// that 2 and 3 stay apart on screen, and every cell shows its numeral
constexpr std::array<std::string_view, 4> kAnsiColors = {
    "\x1b[40;37m", // black
    "\x1b[41;37m", // red
    "\x1b[43;31m", // orange
    "\x1b[43;30m", // yellow
};

int cell_width(const ImplicationTable& t) {
    int digits = 1;
    for (std::size_t n = std::max<std::size_t>(t.sequence_length(), 1); n >= 10; n /= 10)
        ++digits;
    return digits + 1;
}

std::string pad(std::string s, int width) {
    while (static_cast<int>(s.size()) < width)
        s.insert(s.begin(), ' ');
    return s;
}

std::string render_ansi(const ImplicationTable& t) {
    const int w = cell_width(t);
    std::ostringstream out;

    const auto subtable_width = static_cast<int>(kPlainSignatureCount) * (w + 1);
    out << pad("", w + 3);
    for (std::size_t c = 0; c < kFactorCount; ++c) {
        std::string label(factor_name(kFactors[c]));
        out << ' ' << pad(label, subtable_width - 1);
        if (c == 1 || c == 5)
            out << " |";
    }
    out << '\n';

    for (std::size_t a = 0; a < kFactorCount; ++a) {
        // per-block column header
        out << pad(std::string(factor_name(kFactors[a])), w) << " ->";
        for (std::size_t c = 0; c < kFactorCount; ++c) {
            for (PlainSignature vc : kPlainSignatures)
                out << ' ' << pad(std::string(plain_signature_token(vc)), w);
            if (c == 1 || c == 5)
                out << " |";
        }
        out << '\n';
        for (PlainSignature va : kPlainSignatures) {
            out << pad(std::string(plain_signature_token(va)), w) << "   ";
            for (std::size_t c = 0; c < kFactorCount; ++c) {
                for (PlainSignature vc : kPlainSignatures) {
                    const std::uint32_t count = t.at(kFactors[a], kFactors[c], va, vc);
                    out << ' ';
                    if (count <= 3)
                        out << kAnsiColors[count] << pad(std::to_string(count), w) << "\x1b[0m";
                    else
                        out << pad(std::to_string(count), w);
                }
                if (c == 1 || c == 5)
                    out << " |";
            }
            out << '\n';
        }
        if (a == 1 || a == 5) {
            out << std::string(static_cast<std::size_t>(w + 3) +
                                   kFactorCount * static_cast<std::size_t>(subtable_width) + 4,
                               '-')
                << '\n';
        }
    }
    return out.str();
}

std::string render_html(const ImplicationTable& t) {
    std::ostringstream out;
    out << "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n"
        << "<title>implication diagram</title>\n<style>\n"
        << "table.grid { border-collapse: collapse; }\n"
        << "table.grid > tbody > tr > td { border: 1px solid #888; padding: 4px; }\n"
        << "table.grid td.vsep { border-right: 3px solid #000; }\n"
        << "table.grid tr.hsep > td { border-bottom: 3px solid #000; }\n"
        << "table.sub { border-collapse: collapse; font: 12px monospace; }\n"
        << "table.sub td, table.sub th { border: 1px solid #444; width: 2.2em; "
           "text-align: center; }\n"
        << ".c0 { background: #000000; color: #FFFFFF; }\n"
        << ".c1 { background: #FF0000; }\n"
        << ".c2 { background: #FFA500; }\n"
        << ".c3 { background: #FFFF00; }\n"
        << "</style>\n</head>\n<body>\n<table class=\"grid\">\n<tr><td></td>";
    for (std::size_t c = 0; c < kFactorCount; ++c) {
        out << "<td" << ((c == 1 || c == 5) ? " class=\"vsep\"" : "") << "><b>"
            << factor_name(kFactors[c]) << "</b></td>";
    }
    out << "</tr>\n";
    for (std::size_t a = 0; a < kFactorCount; ++a) {
        out << "<tr" << ((a == 1 || a == 5) ? " class=\"hsep\"" : "") << "><td><b>"
            << factor_name(kFactors[a]) << "</b></td>";
        for (std::size_t c = 0; c < kFactorCount; ++c) {
            out << "<td" << ((c == 1 || c == 5) ? " class=\"vsep\"" : "")
                << "><table class=\"sub\"><tr><th>-&gt;</th>";
            for (PlainSignature vc : kPlainSignatures)
                out << "<th>" << plain_signature_token(vc) << "</th>";
            out << "</tr>";
            for (PlainSignature va : kPlainSignatures) {
                out << "<tr><th>" << plain_signature_token(va) << "</th>";
                for (PlainSignature vc : kPlainSignatures) {
                    const std::uint32_t count = t.at(kFactors[a], kFactors[c], va, vc);
                    if (count <= 3)
                        out << "<td class=\"c" << count << "\">" << count << "</td>";
                    else
                        out << "<td>" << count << "</td>";
                }
                out << "</tr>";
            }
            out << "</table></td>";
        }
        out << "</tr>\n";
    }
    out << "</table>\n</body>\n</html>\n";
    return out.str();
}

std::string render_svg(const ImplicationTable& t) {
    // fixed geometry: 8 subtables of 4x4 cells in a 1600x1600 viewport
    constexpr int kCell = 40;
    constexpr int kLabel = 28;
    constexpr int kGap = 14;
    constexpr int kMargin = 48;
    constexpr int kSub = kLabel + 4 * kCell; // one subtable incl. its header row/col

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1600 1600\" "
           "width=\"1600\" height=\"1600\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"1600\" height=\"1600\" fill=\"#FFFFFF\"/>\n";

    const auto sub_origin = [&](std::size_t i) {
        int pos = kMargin + static_cast<int>(i) * (kSub + kGap);
        if (i >= 2)
            pos += kGap; // group separator space after s
        if (i >= 6)
            pos += kGap; // and after p
        return pos;
    };

    for (std::size_t i = 0; i < kFactorCount; ++i) {
        const int x = sub_origin(i) + kLabel + 2 * kCell;
        const int y = sub_origin(i) + kLabel + 2 * kCell;
        out << "<text x=\"" << x << "\" y=\"" << (kMargin - 12)
            << "\" text-anchor=\"middle\" font-size=\"22\" font-family=\"monospace\">"
            << factor_name(kFactors[i]) << "</text>\n";
        out << "<text x=\"" << (kMargin - 16) << "\" y=\"" << (y + 6)
            << "\" text-anchor=\"middle\" font-size=\"22\" font-family=\"monospace\">"
            << factor_name(kFactors[i]) << "</text>\n";
    }

    // group separator rules after s and p on both axes
    for (int after : {2, 6}) {
        const int pos = sub_origin(static_cast<std::size_t>(after)) - kGap - kGap / 2;
        out << "<line x1=\"" << pos << "\" y1=\"" << kMargin << "\" x2=\"" << pos
            << "\" y2=\"1560\" stroke=\"#000000\" stroke-width=\"3\"/>\n";
        out << "<line x1=\"" << kMargin << "\" y1=\"" << pos << "\" x2=\"1560\" y2=\"" << pos
            << "\" stroke=\"#000000\" stroke-width=\"3\"/>\n";
    }

    for (std::size_t a = 0; a < kFactorCount; ++a) {
        for (std::size_t c = 0; c < kFactorCount; ++c) {
            const int ox = sub_origin(c) + kLabel;
            const int oy = sub_origin(a) + kLabel;
            for (std::size_t r = 0; r < kPlainSignatureCount; ++r) {
                out << "<text x=\"" << (ox - 6) << "\" y=\""
                    << (oy + static_cast<int>(r) * kCell + kCell / 2 + 5)
                    << "\" text-anchor=\"end\" font-size=\"14\" font-family=\"monospace\">"
                    << plain_signature_token(kPlainSignatures[r]) << "</text>\n";
                out << "<text x=\"" << (ox + static_cast<int>(r) * kCell + kCell / 2)
                    << "\" y=\"" << (oy - 6)
                    << "\" text-anchor=\"middle\" font-size=\"14\" font-family=\"monospace\">"
                    << plain_signature_token(kPlainSignatures[r]) << "</text>\n";
            }
            for (PlainSignature va : kPlainSignatures) {
                for (PlainSignature vc : kPlainSignatures) {
                    const int x = ox + code(vc) * kCell;
                    const int y = oy + code(va) * kCell;
                    const std::uint32_t count = t.at(kFactors[a], kFactors[c], va, vc);
                    const std::string_view fill = count <= 3 ? hex_color(count) : "#FFFFFF";
                    out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell
                        << "\" height=\"" << kCell << "\" fill=\"" << fill
                        << "\" stroke=\"#444444\"/>\n";
                    out << "<text x=\"" << (x + kCell / 2) << "\" y=\"" << (y + kCell / 2 + 5)
                        << "\" text-anchor=\"middle\" font-size=\"14\" "
                           "font-family=\"monospace\" fill=\""
                        << (count == 0 ? "#FFFFFF" : "#000000") << "\">" << count
                        << "</text>\n";
                }
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_json(const ImplicationTable& t) {
    nlohmann::json counts = nlohmann::json::array();
    for (std::size_t a = 0; a < kFactorCount; ++a) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < kFactorCount; ++c) {
            nlohmann::json sub = nlohmann::json::array();
            for (PlainSignature va : kPlainSignatures) {
                nlohmann::json line = nlohmann::json::array();
                for (PlainSignature vc : kPlainSignatures)
                    line.push_back(t.at(kFactors[a], kFactors[c], va, vc));
                sub.push_back(line);
            }
            row.push_back(sub);
        }
        counts.push_back(row);
    }
    nlohmann::json out = {
        {"sequence_length", t.sequence_length()},
        {"counts", counts},
        {"palette", {{"0", "black"}, {"1", "red"}, {"2", "orange"}, {"3", "yellow"}}},
    };
    return out.dump(2);
}

} // namespace

std::string render(const ImplicationTable& t, DiagramFormat format) {
    switch (format) {
    case DiagramFormat::Ansi: return render_ansi(t);
    case DiagramFormat::Html: return render_html(t);
    case DiagramFormat::Svg: return render_svg(t);
    default: return render_json(t);
    }
}

DiagramFormat diagram_format_from_name(std::string_view name) {
    if (name == "ansi")
        return DiagramFormat::Ansi;
    if (name == "html")
        return DiagramFormat::Html;
    if (name == "svg")
        return DiagramFormat::Svg;
    if (name == "json")
        return DiagramFormat::Json;
    throw ParseError("unknown diagram format '" + std::string(name) + "'");
}

ImplicationTable table_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.contains("sequence_length") || !doc.contains("counts"))
        throw ParseError("diagram JSON needs 'sequence_length' and 'counts'");
    ImplicationTable t(doc["sequence_length"].get<std::size_t>());
    const auto& counts = doc["counts"];
    for (std::size_t a = 0; a < kFactorCount; ++a) {
        for (std::size_t c = 0; c < kFactorCount; ++c) {
            for (PlainSignature va : kPlainSignatures) {
                for (PlainSignature vc : kPlainSignatures) {
                    t.cell(kFactors[a], kFactors[c], va, vc) =
                        counts.at(a).at(c).at(static_cast<std::size_t>(code(va)))
                            .at(static_cast<std::size_t>(code(vc)))
                            .get<std::uint32_t>();
                }
            }
        }
    }
    return t;
}

InvariantSet join_invariants(const InvariantSet& a, const InvariantSet& b) {
    InvariantSet out;
    out.bits() = a.bits() | b.bits();
    out.provenance = "join(" + a.provenance + "," + b.provenance + ")";
    return out;
}

InvariantSet meet_invariants(const InvariantSet& a, const InvariantSet& b) {
    InvariantSet out;
    out.bits() = a.bits() & b.bits();
    out.provenance = "meet(" + a.provenance + "," + b.provenance + ")";
    return out;
}

ImplicationTable superpose(const ImplicationTable& t1, const ImplicationTable& t2,
                           SuperposeOp op) {
    ImplicationTable out(std::max(t1.sequence_length(), t2.sequence_length()));
    for (std::size_t i = 0; i < ImplicationTable::kCellCount; ++i) {
        out.counts()[i] = op == SuperposeOp::Join ? std::min(t1.counts()[i], t2.counts()[i])
                                                  : std::max(t1.counts()[i], t2.counts()[i]);
    }
    return out;
}

} // namespace sppkit
