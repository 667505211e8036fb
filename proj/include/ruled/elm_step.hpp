#ifndef RULED_ELM_STEP_HPP
#define RULED_ELM_STEP_HPP

#include <string>

namespace ruled {

/// Where the transform center x sits relative to the distinguished sections.
/// OnX1 / OffBoth* make sense only on a decomposable surface; OnMinSection is
/// the position usable on any surface.
enum class Position {
    OnX0,
    OnX1,
    OffBothGenericFiber,   // x on Pf, off X0 and X1, P not a base point of |-e|
    OffBothBasePointFiber, // x on Pf, off X0 and X1, P a base point of |-e|
    OnMinSection,
    OffMinSection, // declared but undecidable: no transform rule applies
    Unknown,
};

inline const char* to_string(Position p) {
    switch (p) {
        case Position::OnX0: return "OnX0";
        case Position::OnX1: return "OnX1";
        case Position::OffBothGenericFiber: return "OffBothGenericFiber";
        case Position::OffBothBasePointFiber: return "OffBothBasePointFiber";
        case Position::OnMinSection: return "OnMinSection";
        case Position::OffMinSection: return "OffMinSection";
        default: return "Unknown";
    }
}

/// One elementary transformation: blow up x on the generator over P at the
/// declared position, contract the strict transform of the generator.
struct ElmStep {
    std::string P;
    Position position = Position::Unknown;
};

} // namespace ruled

#endif
