/* horoquot: exact decision procedures for quotients of affine horospherical
 * varieties by the derived group of a maximal unipotent subgroup.
 *
 * C interface to the engine.  All computations are exact (arbitrary
 * precision rational arithmetic); every report function renders a complete
 * text or JSON document into a malloc'd NUL-terminated string owned by the
 * caller (release with hq_string_free).
 *
 * Input syntax:
 *   type      "A3", "G2", products "A1xA2" (factor order significant)
 *   weight    comma-separated rationals in fundamental-weight coordinates,
 *             e.g. "1,0,2" or "1/2,0"; coweights analogously in
 *             fundamental-coweight coordinates
 *   list      ':'-separated weights, e.g. "1,0,0:0,0,1"
 *   nodes     comma-separated 1-based Dynkin node indices, e.g. "1,4";
 *             the empty string is the empty set
 */
#ifndef HOROQUOT_H
#define HOROQUOT_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; the command-line tool uses them as exit codes. */
typedef enum hq_status {
  HQ_OK = 0,
  HQ_ERR_INTERNAL = 1, /* an internal invariant failed */
  HQ_ERR_PARSE = 2,    /* unparsable input or input outside the domain */
  HQ_ERR_CAP = 3       /* a configured resource cap was exceeded */
} hq_status;

typedef enum hq_format { HQ_FORMAT_TEXT = 0, HQ_FORMAT_JSON = 1 } hq_format;

/* Opaque root-system handle. */
typedef struct hq_root_system hq_root_system;

/* Parses a type string and builds the root system.  On success stores the
 * new handle in *out and returns HQ_OK.  On failure stores NULL in *out,
 * a message in *err (when err is non-NULL; release with hq_string_free)
 * and returns the status. */
hq_status hq_root_system_create(const char* type, hq_root_system** out, char** err);
void hq_root_system_free(hq_root_system* rs);

/* Total rank, or -1 for a NULL handle. */
int hq_root_system_rank(const hq_root_system* rs);

/* Report functions.  Common contract: on success *out receives the rendered
 * document and the return value is HQ_OK; on failure *out is NULL, *err
 * (when non-NULL) receives the error message, and the status tells the
 * class of failure.  Strings passed in are read-only and copied as needed.
 */

/* Monoid analysis: minimal generators, ranks, dimensions, polynomiality and
 * equidimensionality verdicts with witnesses. */
hq_status hq_analyze(const hq_root_system* rs, const char* weight_list, hq_format format,
                     char** out, char** err);

/* Highest-weight-vector orbit closure: dimension, embedding dimension,
 * homological dimension. */
hq_status hq_hv(const hq_root_system* rs, const char* weight, hq_format format, char** out,
                char** err);

/* Codimension-two null-fibre witness for the invariant-ring quotient. */
hq_status hq_nullcone(const hq_root_system* rs, const char* weight, hq_format format, char** out,
                      char** err);

/* Sparseness check for one node set / enumeration of all sparse sets. */
hq_status hq_sparse_check(const hq_root_system* rs, const char* nodes, hq_format format,
                          char** out, char** err);
hq_status hq_sparse_list(const hq_root_system* rs, hq_format format, char** out, char** err);

/* Admissibility of a one-parameter subgroup given by a coweight. */
hq_status hq_hm(const hq_root_system* rs, const char* coweight, hq_format format, char** out,
                char** err);

/* Cofreeness classification of the simple module with the given highest
 * weight (simple types of rank >= 2 only). */
hq_status hq_cofree(const hq_root_system* rs, const char* weight, hq_format format, char** out,
                    char** err);

/* Contraction hypotheses for a list of generator weights. */
hq_status hq_contraction(const hq_root_system* rs, const char* weight_list, hq_format format,
                         char** out, char** err);

/* Root-system data: Cartan matrix, positive roots, basic invariants. */
hq_status hq_roots(const hq_root_system* rs, hq_format format, char** out, char** err);

/* Weyl group: summary (order, longest length), full element list, minimal
 * coset representatives, minimal satisfying length, orbit of a weight.
 * max_order (or max_size for orbits) caps the enumeration; pass 0 for the
 * default cap. */
hq_status hq_weyl_summary(const hq_root_system* rs, hq_format format, char** out, char** err);
hq_status hq_weyl_list(const hq_root_system* rs, long max_order, hq_format format, char** out,
                       char** err);
hq_status hq_weyl_coset_reps(const hq_root_system* rs, const char* nodes, long max_order,
                             hq_format format, char** out, char** err);
hq_status hq_weyl_min_length(const hq_root_system* rs, const char* nodes, long max_order,
                             hq_format format, char** out, char** err);
hq_status hq_weyl_orbit(const hq_root_system* rs, const char* weight, long max_size,
                        hq_format format, char** out, char** err);

/* Cone reports.  The cone is generated by the given weights (or, for
 * hq_cone_roots_minus_simple, by the non-simple positive roots); dual != 0
 * replaces it by its dual cone.  When contains or interior is non-NULL it
 * names a vector whose membership (closure and relative interior) is
 * reported instead of the cone description; at most one of the two may be
 * given. */
hq_status hq_cone_from_weights(const hq_root_system* rs, const char* weight_list, int dual,
                               const char* contains, const char* interior, hq_format format,
                               char** out, char** err);
hq_status hq_cone_roots_minus_simple(const hq_root_system* rs, int dual, const char* contains,
                                     const char* interior, hq_format format, char** out,
                                     char** err);

/* Verification suites.  suite is a suite name or "all" (NULL means "all").
 * The rendered report is stored in *out even when checks fail; failing
 * checks yield HQ_ERR_INTERNAL. */
hq_status hq_verify(const char* suite, hq_format format, char** out, char** err);

/* Releases any string returned through a char** out-parameter. */
void hq_string_free(char* s);

/* Library version, a static string. */
const char* hq_version(void);

#ifdef __cplusplus
}
#endif

#endif /* HOROQUOT_H */
