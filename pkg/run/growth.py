import argparse

from ranklab.costmodel.growth import growth_report, normalized_band, write_report
from ranklab.utils import intlist, load_config, section

parser = argparse.ArgumentParser(description='Operation-count growth table from the config bench section')
parser.add_argument('--config', default='./config.yaml', help='path to config file')
parser.add_argument('--sizes', type=intlist, default=None, help='comma separated sizes (config if omitted)')
parser.add_argument('--out', default='./growth.csv', help='output csv path')

args = parser.parse_args()

if __name__ == '__main__':
    bench = section(load_config(args.config), 'bench')
    sizes = args.sizes if args.sizes is not None else bench.get('sizes', [256, 512, 1024])
    report = growth_report(sizes, trials=bench.get('trials', 20),
                           seed=bench.get('seed', 7), num_workers=bench.get('num_workers', 0), progress=True)
    write_report(report, args.out)
    print(report.to_string(index=False))
    print('normalized band:', f'{normalized_band(report):.3f}')
