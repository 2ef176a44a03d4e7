#include "homolocal/basis.hpp"

namespace homolocal {

SimplicialComplex seal_cycle(const SimplicialComplex& complex, const Chain& z, SealRecord* record)
{
    if (z.simplices.empty() || !complex.boundary(z).empty())
        throw Error(ErrorKind::NotACycle, "only a nonzero cycle can be sealed");
    for (Index s : z.simplices)
        if (complex.is_sealed(z.dim, s))
            throw Error(ErrorKind::SealedInput, "cycle uses a sealed simplex");

    ComplexBuilder builder(complex);
    const VertexId apex = builder.new_vertex(true);
    for (Index s : z.simplices)
    {
        const auto vs = complex.vertices(z.dim, s);
        std::vector<VertexId> cone(vs.begin(), vs.end());
        cone.push_back(apex);
        builder.add_dense(std::move(cone), true);
    }
    SimplicialComplex sealed = std::move(builder).build();

    if (record)
    {
        record->vertex = apex;
        record->added.assign(static_cast<std::size_t>(sealed.dimension() + 1), 0);
        for (int k = 0; k <= sealed.dimension(); ++k)
            record->added[k] = sealed.count(k) - complex.count(k);
    }
    return sealed;
}

BasisResult measure_all(const SimplicialComplex& complex, int d, const MeasureOptions& options)
{
    if (d < 1)
        throw Error(ErrorKind::InvalidArgument, "homology dimension must be at least 1");
    BasisResult result;
    result.dim = d;
    result.betti = betti_number(complex, d);
    result.sealed = complex;

    for (std::size_t round = 0; round < result.betti; ++round)
    {
        MeasureOptions per_round = options;
        per_round.seed = derive_seed(options.seed, round);
        Measurement m;
        try
        {
            m = measure_smallest(result.sealed, d, per_round, &result.diagnostics);
        }
        catch (const Error& e)
        {
            if (e.kind() != ErrorKind::NoNontrivialClass)
                throw;
            throw Error(ErrorKind::InternalInconsistency,
                        "class lost after sealing in round " + std::to_string(round));
        }
        SealRecord record;
        result.sealed = seal_cycle(result.sealed, m.cycle, &record);
        result.seal_log.push_back(std::move(record));
        result.classes.push_back(std::move(m));
    }
    return result;
}

}  // namespace homolocal
