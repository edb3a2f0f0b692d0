#pragma once

namespace jacgen {

// Several published statements about these sequences circulate in two
// variants: the statement as originally printed, and the repaired statement
// that brute-force checking actually confirms. Both are first-class here so
// the verifier can demonstrate exactly where the printed variant breaks.
// For statements that are correct as printed the two coincide.
enum class Form {
  PaperLiteral,  // as printed
  Corrected,     // as confirmed by exhaustive checking
};

inline const char* form_name(Form f) {
  return f == Form::PaperLiteral ? "paper" : "corrected";
}

}  // namespace jacgen
