"""
Report builders and renderers behind the bcndata commands

Every ``run_*`` function returns a JSON-ready report dictionary; the
``render_*`` functions print the same report for humans.
"""
import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

from rich.console import Console
from rich.table import Table

from .analysis import basin, cycles_within, data_equilibria, informative_for_reachability, target_states
from .core.exception_handler import EXIT_OK, EXIT_UNSOLVABLE, EXIT_VERIFICATION_FAILED
from .core.models import AnalysisKind
from .data import (
    DataSet, covers_all_pairs, identify, informative_for_network_reachability,
    is_informative_for_identifiability, l_tot_d, missing_pairs
)
from .synthesis import output_regulation, safe_control
from .utils.file_formats import model_to_dict
from .verify import verify_output_regulation, verify_safe_control

logger = logging.getLogger(__name__)


def partial_matrix(dim: int, columns: Sequence[Optional[int]]) -> str:
    """A logical matrix in compact form, ``*`` marking free columns"""
    entries = ' '.join('*' if c is None else str(c) for c in columns)
    return f"δ_{dim}[{entries}]"


def _blocks(columns: Sequence[Optional[int]], n_states: int) -> List[Sequence[Optional[int]]]:
    return [columns[b:b + n_states] for b in range(0, len(columns), n_states)]


# Analyses

def run_analysis(ds: DataSet, kind: AnalysisKind, target: Optional[Sequence[int]] = None,
                 y_star: Optional[int] = None, cycle_cap: int = 1_000_000) -> Dict[str, Any]:
    """Run one data analysis and return its report"""
    report: Dict[str, Any] = {'success': True, 'analysis': kind.value, 'N': ds.n_states, 'M': ds.n_inputs,
                              'P': ds.n_outputs, 'T': ds.T}

    if kind == AnalysisKind.IDENTIFIABILITY:
        report.update({
            'informative': is_informative_for_identifiability(ds),
            'covers_all_pairs': covers_all_pairs(ds),
            'missing_pairs': [list(pair) for pair in missing_pairs(ds)],
            'network_reachable': informative_for_network_reachability(ds),
        })
    elif kind == AnalysisKind.IDENTIFY:
        report['model'] = model_to_dict(identify(ds))
    elif kind == AnalysisKind.EQUILIBRIA:
        report['equilibria'] = [{'state': j, 'input': u} for j, u in data_equilibria(ds).items()]
    elif kind == AnalysisKind.LTOT:
        matrix = l_tot_d(ds)
        report['columns'] = [sorted(matrix.column_support(j)) for j in range(1, ds.n_states + 1)]
    elif kind == AnalysisKind.MASK:
        report['mask'] = ds.mask.to_dict()
    elif kind == AnalysisKind.REACH:
        report.update({'target': sorted(set(target or ())),
                       'informative': informative_for_reachability(ds, target or ())})
    elif kind == AnalysisKind.BASIN:
        report['basin'] = basin(ds, target or ()).to_dict()
    elif kind == AnalysisKind.TARGETS:
        report.update({'y_star': y_star, 'states': sorted(target_states(ds, y_star))})
    elif kind == AnalysisKind.CYCLES:
        states = target_states(ds, y_star)
        report.update({'y_star': y_star, 'target_states': sorted(states)})
        if states:
            report.update(cycles_within(ds, states, cap=cycle_cap).to_dict())
        else:
            report.update({'cycles': [], 'edge_inputs': []})
    return report


def render_analysis(console: Console, report: Dict[str, Any]) -> None:
    kind = AnalysisKind(report['analysis'])
    console.print(f"[bold]{kind.value}[/bold]  N={report['N']} M={report['M']} "
                  f"P={report['P'] if report['P'] is not None else '-'} T={report['T']}")

    if kind == AnalysisKind.IDENTIFIABILITY:
        verdict = "[green]informative[/green]" if report['informative'] else "[yellow]not informative[/yellow]"
        console.print(f"Identifiability: {verdict}")
        if report['missing_pairs']:
            shown = ', '.join(f"(u={i}, x={j})" for i, j in report['missing_pairs'][:20])
            console.print(f"Missing (input, state) pairs: {shown}")
        console.print(f"Every compatible network reachable: {report['network_reachable']}")
    elif kind == AnalysisKind.IDENTIFY:
        model = report['model']
        for i, block in enumerate(_blocks(model['L'], model['N']), start=1):
            console.print(f"L_{i} = {partial_matrix(model['N'], block)}")
        console.print(f"H = {partial_matrix(model['P'], model['H'])}")
    elif kind == AnalysisKind.EQUILIBRIA:
        table = Table(title="Equilibria compatible with the data")
        table.add_column("State", style="cyan")
        table.add_column("Input", style="magenta")
        for item in report['equilibria']:
            table.add_row(str(item['state']), str(item['input']))
        console.print(table)
    elif kind == AnalysisKind.LTOT:
        table = Table(title="L_tot^d")
        table.add_column("From", style="cyan")
        table.add_column("To", style="green")
        for j, rows in enumerate(report['columns'], start=1):
            table.add_row(str(j), ', '.join(map(str, rows)) or "-")
        console.print(table)
    elif kind == AnalysisKind.MASK:
        mask = report['mask']
        console.print(f"L~ = {partial_matrix(mask['N'], mask['L'])}")
        if mask['H'] is not None:
            console.print(f"H~ = {partial_matrix(mask['P'], mask['H'])}")
        console.print(f"{mask['known_columns']} known, {mask['free_columns']} free columns")
    elif kind == AnalysisKind.REACH:
        console.print(f"Target {report['target']} reachable from every state: {report['informative']}")
    elif kind == AnalysisKind.BASIN:
        render_basin(console, report['basin'])
    elif kind == AnalysisKind.TARGETS:
        console.print(f"X^d({report['y_star']}) = {report['states']}")
    elif kind == AnalysisKind.CYCLES:
        console.print(f"X^d({report['y_star']}) = {report['target_states']}")
        render_cycles(console, report['cycles'], report['edge_inputs'])


def render_basin(console: Console, basin_report: Dict[str, Any]) -> None:
    table = Table(title="Basin of attraction")
    table.add_column("Layer", style="cyan")
    table.add_column("States", style="green")
    for index, layer in enumerate(basin_report['layers']):
        table.add_row(f"S_{index}", ', '.join(map(str, layer)))
    console.print(table)
    if basin_report['inputs']:
        console.print("Inputs: " + ', '.join(f"{j}→{u}" for j, u in basin_report['inputs'].items()))
    if basin_report['outside']:
        console.print(f"[yellow]No data path from states {basin_report['outside']}[/yellow]")


def render_cycles(console: Console, cycles: List[List[int]], edge_inputs: List[List[int]]) -> None:
    if not cycles:
        console.print("[yellow]No cycles[/yellow]")
        return
    table = Table(title="Data cycles")
    table.add_column("Cycle", style="cyan")
    table.add_column("Edge inputs", style="magenta")
    for cycle, inputs in zip(cycles, edge_inputs):
        table.add_row(' → '.join(map(str, cycle + cycle[:1])), ', '.join(map(str, inputs)))
    console.print(table)


# Synthesis

def run_safe_control(ds: DataSet, unsafe: Sequence[int], verify_budget: Optional[int] = None,
                     seed: int = 0) -> Tuple[Dict[str, Any], int]:
    """Synthesize (and optionally verify) a safe-control feedback; returns (report, exit code)"""
    result = safe_control(ds, unsafe)
    report: Dict[str, Any] = {'success': True, 'problem': 'safe', 'N': ds.n_states, 'M': ds.n_inputs,
                              **result.to_dict()}
    if not result.solvable:
        return report, EXIT_UNSOLVABLE
    if verify_budget is not None:
        verdict = verify_safe_control(ds, result, verify_budget, seed)
        report['verification'] = verdict.to_dict()
        if not verdict.passed:
            return report, EXIT_VERIFICATION_FAILED
    return report, EXIT_OK


def run_output_regulation(ds: DataSet, y_star: int, verify_budget: Optional[int] = None, seed: int = 0,
                          cycle_cap: int = 1_000_000) -> Tuple[Dict[str, Any], int]:
    """Synthesize (and optionally verify) a regulating feedback; returns (report, exit code)"""
    result = output_regulation(ds, y_star, cycle_cap=cycle_cap)
    report: Dict[str, Any] = {'success': True, 'problem': 'regulate', 'N': ds.n_states, 'M': ds.n_inputs,
                              **result.to_dict()}
    if not result.solvable:
        return report, EXIT_UNSOLVABLE
    if verify_budget is not None:
        verdict = verify_output_regulation(ds, result, verify_budget, seed)
        report['verification'] = verdict.to_dict()
        if not verdict.passed:
            return report, EXIT_VERIFICATION_FAILED
    return report, EXIT_OK


def render_synthesis(console: Console, report: Dict[str, Any]) -> None:
    certificate = report['certificate']
    title = "Safe control" if report['problem'] == 'safe' else f"Output regulation to y*={certificate['y_star']}"
    if report['solvable']:
        console.print(f"[green]✓[/green] {title}: solvable from data")
        console.print(f"K = {partial_matrix(report['M'], report['K'])}")
    else:
        console.print(f"[yellow]✗[/yellow] {title}: the data are not informative")

    if report['problem'] == 'safe':
        console.print(f"Unsafe states: {certificate['unsafe']}")
        if certificate['missing_stay']:
            console.print(f"Safe states without a recorded safe transition: {certificate['missing_stay']}")
    else:
        console.print(f"X^d(y*) = {certificate['target_states']}")
        render_cycles(console, certificate['cycles'], certificate['edge_inputs'])
    if certificate['basin'] is not None:
        render_basin(console, certificate['basin'])

    verification = report.get('verification')
    if verification is not None:
        if verification['pass']:
            console.print(f"[green]✓[/green] Verified on {verification['models_checked']} compatible models "
                          f"(seed {verification['seed']})")
        else:
            counterexample = verification['counterexample']
            console.print(f"[red]✗ Verification failed on model {verification['models_checked']} "
                          f"from state {counterexample['x0']}: trace {counterexample['trace']}[/red]")
