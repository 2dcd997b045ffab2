#ifndef UGTOP_IO_HPP
#define UGTOP_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ugtop/covering.hpp"
#include "ugtop/csp.hpp"
#include "ugtop/nonabelian.hpp"
#include "ugtop/surface.hpp"
#include "ugtop/surface_reduction.hpp"

namespace ugtop {

/// UGIF: text format for constraint instances and covers.
///
///   ugif 1
///   # comment lines
///   type ug|max2lin|cover
///   group symmetric|cyclic|explicit     (type cover only)
///   k N
///   vertices N
///   generator a0,a1,...                 (explicit covers, zero or more)
///   edge U V perm a0,a1,...             (ug / cover)
///   edge U V c C                        (max2lin)
///
/// Unknown keys are rejected. parse(serialize(doc)) == doc.
struct UgifDoc {
    enum class Type { ug, max2lin, cover };
    Type type = Type::ug;
    int k = 1;
    int vertices = 0;
    GroupTag cover_group = GroupTag::symmetric;
    std::vector<std::string> comments;
    std::vector<Perm> generators;
    // per edge: endpoints plus either a permutation (ug/cover) or a shift c
    std::vector<UGConstraint> perm_edges;
    std::vector<LinConstraint> lin_edges;

    bool operator==(const UgifDoc&) const = default;

    static UgifDoc from(const UGInstance& inst, std::vector<std::string> comments = {});
    static UgifDoc from(const Max2LinInstance& inst, std::vector<std::string> comments = {});
    static UgifDoc from(const GCoveringGraph& cover, std::vector<std::string> comments = {});

    UGInstance to_ug() const;           // type ug
    Max2LinInstance to_max2lin() const; // type max2lin
    GCoveringGraph to_cover() const;    // any type
};

UgifDoc parse_ugif(std::istream& in);
UgifDoc parse_ugif_file(const std::string& path);
std::string serialize_ugif(const UgifDoc& doc);

/// SCF: text format for surface complexes with optional labels.
///
///   scf 1
///   # comment lines
///   vertices N
///   group Z<k>|S<n>                     (optional, required with labels)
///   edge ID U V
///   rotation V: +ID -ID ...
///   face ID: +ID ...                    (optional, rederived on parse)
///   label ID value                      (Zk: integer; Sn: a0,a1,...)
///
/// Provenance is carried by comments of the form "# class ID NAME" and
/// "# universal V"; other comment lines are preserved verbatim.
struct ScfDoc {
    int vertices = 0;
    std::vector<std::string> comments;
    std::optional<int> zk;  // group Z<k>
    std::optional<int> sn;  // group S<n>
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rotation;
    std::vector<std::vector<int>> faces;      // as written (serializers emit derived)
    std::vector<int> zk_labels;               // aligned with edges when zk
    std::vector<Perm> sn_labels;              // aligned with edges when sn
    std::vector<std::string> edge_classes;    // empty or aligned with edges
    std::optional<int> universal_vertex;

    bool operator==(const ScfDoc&) const = default;

    static ScfDoc from(const SurfaceComplex& c);
    static ScfDoc from(const SurfaceInstance& si);
    static ScfDoc from(const CoverSurfaceInstance& si);

    SurfaceComplex to_complex() const;  // retraces faces, checks any written ones
    Cochain1 to_cochain() const;        // requires zk labels
    NonAbCochain1 to_nonab() const;     // requires sn labels
    SurfaceInstance to_instance() const;
};

ScfDoc parse_scf(std::istream& in);
ScfDoc parse_scf_file(const std::string& path);
std::string serialize_scf(const ScfDoc& doc);

void write_file(const std::string& path, const std::string& content);

} // namespace ugtop

#endif
