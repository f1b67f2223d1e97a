#ifndef UCLONE_H
#define UCLONE_H

/* C interface to the clone-analysis core. All functions return a status
 * code; on failure uc_last_error() describes the problem for the calling
 * thread. Strings returned through `char**` are heap-allocated and must be
 * released with uc_string_free(). */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    UC_OK = 0,
    UC_ERR_PARSE = 1,
    UC_ERR_BUDGET = 2,
    UC_ERR_INVALID = 3,
    UC_ERR_IO = 4
} uc_status;

/* Resource limits; 0 selects the built-in default. */
typedef struct {
    int max_aux;   /* auxiliary variables searched by find-upp */
    int max_arity; /* polymorphism arity cap */
    int max_vars;  /* instance variable cap */
} uc_limits;

typedef struct uc_language uc_language;
typedef struct uc_instance uc_instance;

const char* uc_last_error(void);
void uc_string_free(char* s);

/* --- languages --------------------------------------------------------- */
uc_status uc_language_load(const char* path, uc_language** out);
uc_status uc_language_parse(const char* text, uc_language** out);
void uc_language_free(uc_language* g);
uc_status uc_language_format(const uc_language* g, char** out);
uc_status uc_language_dual(const uc_language* g, uc_language** out);

/* --- instances ---------------------------------------------------------- */
uc_status uc_instance_load(const char* path, uc_instance** out);
void uc_instance_free(uc_instance* i);
uc_status uc_instance_format(const uc_instance* i, const char* lang_path, char** out);
uc_status uc_instance_dual(const uc_instance* i, uc_instance** out);

/* --- classification ----------------------------------------------------- */
uc_status uc_atom_profile(const uc_language* g, char** out);
uc_status uc_usat_class(const uc_language* g, char** out);
uc_status uc_ucsp_class(const uc_language* g, const uc_limits* lim, char** out);
uc_status uc_classify(const uc_language* g, const uc_limits* lim, char** out);
uc_status uc_covered(const char* coclone_name, char** out);

/* --- definability ------------------------------------------------------- */
uc_status uc_qfpp_closure(const uc_language* g, int n, const uc_limits* lim, char** out);
/* target: "<langfile>:<NAME>", or just a path when the file holds one
 * relation. */
uc_status uc_find_upp(const uc_language* g, const char* target, const uc_limits* lim,
                      char** out);
/* Validates every definition in the file; with a non-null target spec the
 * evaluation is compared against that relation, otherwise against itself. */
uc_status uc_check_upp(const char* defs_path, const char* target, char** out);

/* --- weak bases --------------------------------------------------------- */
/* clone: a catalog clone name, or a path to a file of total `pop` blocks
 * listing generators. */
uc_status uc_weak_base(const char* clone, int s, char** out);
uc_status uc_emit_qfpp(const uc_language* g, int s, char** out);

/* --- separation certificates -------------------------------------------- */
/* route: "ie0", "ie", or "frozen". For the frozen route, `plain_path` names
 * the plain-base language and n the chain index; otherwise `target` names
 * the relation to separate as in uc_find_upp. */
uc_status uc_certify(const char* route, const char* lang_path, const char* target,
                     const char* plain_path, const char* witness_path, int n,
                     char** out);

/* --- solving ------------------------------------------------------------ */
uc_status uc_count(const uc_instance* i, int jobs, const uc_limits* lim,
                   uint64_t* out);
uc_status uc_unique(const uc_instance* i, const uc_limits* lim, char** out);
uc_status uc_enumerate(const uc_instance* i, uint64_t limit, const uc_limits* lim,
                       char** out);

/* --- reductions --------------------------------------------------------- */
/* Each writes the target language to out_lang_path and returns the rewritten
 * instance text referencing it. plan: "3clause" selects the built-in plan. */
uc_status uc_reduce_upp(const uc_instance* i, const char* defs_path,
                        const char* out_lang_path, char** out);
uc_status uc_reduce_unsat(const uc_instance* i, const char* out_lang_path, char** out);
uc_status uc_reduce_eth(const uc_instance* i, const char* plan,
                        const char* out_lang_path, char** out);

#ifdef __cplusplus
}
#endif

#endif
