#include "oscint/paper_values.hpp"

namespace oscint::paper {

const std::vector<LabeledValue>& tab1() {
  static const std::vector<LabeledValue> t = {
      {10, "0.313231759254"},
      {100, "0.211329543346"},
      {1000, "0.191323989712"},
      {10000, "0.188320351076"},
      {100000, "0.187917210140"},
  };
  return t;
}

const std::vector<LabeledValue>& tab2() {
  static const std::vector<LabeledValue> t = {
      {10, "0.187885886113800730351382438464680824292327407645248188116946"},
      {20, "0.187859649854050194658445181421685949965109596411421113134589"},
      {40, "0.187859642462068655529781630996634559217485607603915205816966"},
      {100, "0.187859642462067120248517934054273314215151463271236583869269"},
      {200, "0.187859642462067120248517934054273230055903094900138786171982"},
  };
  return t;
}

const std::vector<LabeledValue>& tab3() {
  static const std::vector<LabeledValue> t = {
      {10, "0.187859642389333316567457476113016727048599369932998191180459"},
      {20, "0.187859642462067119674255755542940758484982176117045969528027"},
      {40, "0.187859642462067120248517934054273140023454509840554949525330"},
      {100, "0.187859642462067120248517934054273230055903094900138786171986"},
  };
  return t;
}

const std::vector<MiRow>& tab4() {
  static const std::vector<MiRow> t = {
      {2, 2000, "0.07077873792033467823", "-0.68400849330911320239"},
      {2, 4000, "0.07077826545794147869", "-0.68400115445281602856"},
      {3, 2000, "0.07077594388618778878", "-0.68400039709147911789"},
      {3, 4000, "0.07077603597753547955", "-0.68400040477320427448"},
      {3, 8000, "0.07077604728595562114", "-0.68400040978725640089"},
      {3, 16000, "0.07077604069379310873", "-0.68400038906169127559"},
      {3, 32000, "0.07077603794889411182", "-0.68400038968332537849"},
      {3, 64000, "0.07077603964902400034", "-0.68400038933267435379"},
      {5, 2000, "0.07077603934743949117", "-0.68400038942675266591"},
      {5, 4000, "0.07077603931081786932", "-0.68400038943414042302"},
      {5, 8000, "0.07077603931077043492", "-0.68400038943655207372"},
      {5, 16000, "0.07077603931149307863", "-0.68400038943803823084"},
      {5, 32000, "0.07077603931155557088", "-0.68400038943794081422"},
      {5, 64000, "0.07077603931152496616", "-0.68400038943793426656"},
      {6, 2000, "0.07077603931115051881", "-0.68400038943952383435"},
      {6, 4000, "0.07077603931156321151", "-0.68400038943794556862"},
      {6, 8000, "0.07077603931154254337", "-0.68400038943792386069"},
      {6, 16000, "0.07077603931152730519", "-0.68400038943793206498"},
      {6, 32000, "0.07077603931152869782", "-0.68400038943793231267"},
      {6, 64000, "0.07077603931152878997", "-0.68400038943793211168"},
      {8, 2000, "0.07077603932853563807", "-0.68400038944555242777"},
      {8, 4000, "0.07077603931259171964", "-0.68400038943840850746"},
      {9, 2000, "0.07077603925904942234", "-0.68400038951437536286"},
      {9, 4000, "0.07077603930824878310", "-0.68400038944270983422"},
  };
  return t;
}

const std::vector<MiRow>& tab5() {
  static const std::vector<MiRow> t = {
      {2, 4000, "0.07077612979610666804", "-0.68400038256040301228"},
      {2, 8000, "0.07077604264870771610", "-0.68400037471801246748"},
      {3, 4000, "0.07077603954212465077", "-0.68400039095784542350"},
      {3, 8000, "0.07077603950170386538", "-0.68400038943798882953"},
      {4, 4000, "0.07077603927887287271", "-0.68400038944795068337"},
      {4, 8000, "0.07077603931218586254", "-0.68400038944147410684"},
      {5, 4000, "0.07077603931112220214", "-0.68400038943707487961"},
      {5, 8000, "0.07077603931144862845", "-0.68400038943795645974"},
      {5, 16000, "0.07077603931151256105", "-0.68400038943794236597"},
      {5, 32000, "0.07077603931153004386", "-0.68400038943793234690"},
      {5, 64000, "0.07077603931152889348", "-0.68400038943793195977"},
      {6, 4000, "0.07077603931156163745", "-0.68400038943790335638"},
      {6, 8000, "0.07077603931152840681", "-0.68400038943792930582"},
      {6, 16000, "0.07077603931152865655", "-0.68400038943793183965"},
      {6, 32000, "0.07077603931152880374", "-0.68400038943793214262"},
      {6, 64000, "0.07077603931152880496", "-0.68400038943793212992"},
      {6, 128000, "0.07077603931152880345", "-0.68400038943793212926"},
      {6, 256000, "0.0707760393115288035480930", "-0.6840003894379321291922485"},
      {6, 512000, "0.0707760393115288035386982", "-0.6840003894379321291820339"},
      {6, 1024000, "0.0707760393115288035395359", "-0.6840003894379321291828037"},
      {6, 2048000, "0.0707760393115288035395336", "-0.6840003894379321291827445"},
      {8, 4000, "0.07077603931135483266", "-0.68400038943809843545"},
      {8, 8000, "0.07077603931151793368", "-0.68400038943794252308"},
      {9, 4000, "0.07077603931088567214", "-0.68400038943711147080"},
      {9, 8000, "0.07077603931148860789", "-0.68400038943788083818"},
  };
  return t;
}

const std::vector<LongmanRow>& tab6() {
  static const std::vector<LongmanRow> t = {
      {32, 60, "0.07077603721021819390", "-0.68400038753980049654"},
      {32, 70, "0.07077603721021819390", "-0.68400038753980049654"},
      {64, 70, "0.07077603918043104863", "-0.68400038931936816305"},
      {128, 70, "0.07077603930333884842", "-0.68400038943052296458"},
      {256, 70, "0.07077603931101698843", "-0.68400038943746907333"},
      {512, 70, "0.07077603931149681599", "-0.68400038943790318846"},
      {1024, 70, "0.07077603931152680433", "-0.68400038943793032039"},
      {2048, 70, "0.07077603931152867859", "-0.68400038943793201613"},
      {4096, 70, "0.07077603931152879573", "-0.68400038943793212212"},
      {8192, 50, "0.07077603931152880305", "-0.68400038943793212874"},
      {8192, 60, "0.07077603931152880305", "-0.68400038943793212874"},
      {16384, 50, "0.07077603931152880351", "-0.68400038943793212916"},
      {16384, 60, "0.07077603931152880351", "-0.68400038943793212916"},
  };
  return t;
}

const std::vector<Tab8Row>& tab8() {
  static const std::vector<Tab8Row> t = {
      {1, "0.05762490298863188764", "-0.68331060191932132015"},
      {2, "0.06935454902524610824", "-0.68451362283943263006"},
      {3, "0.07066781734932533318", "-0.68408393964817446557"},
      {4, "0.07076978736326279015", "-0.68400839361204835470"},
      {5, "0.07077575770475264223", "-0.68400096184084805332"},
      {6, "0.07077602957520227166", "-0.68400042266805241181"},
      {7, "0.07077603908225272182", "-0.68400039107408096452"},
      {8, "0.07077603931050590528", "-0.68400038950815469850"},
      {9, "0.07077603931177817100", "-0.68400038944060977421"},
  };
  return t;
}

const std::vector<VksRow>& tab_vks() {
  static const std::vector<VksRow> t = {
      {2, 2, "0.0234592920732284411947929", "-0.0024060418402226198275196"},
      {2, 3, "0.0147167653246107850628908", "-0.0078739079798083225909317"},
      {2, 4, "0.0080788243950624846223234", "-0.0087094002295813942921939"},
      {2, 5, "0.0038282314868382609838401", "-0.0076206659960747444416239"},
      {2, 6, "0.0013846381369360916659413", "-0.0060334458936144149013900"},
      {2, 7, "0.0000998710536555974796592", "-0.0045501919692512628703906"},
      {2, 8, "-0.0005097889780015996357674", "-0.0033548439064072548162349"},
      {3, 3, "0.0078796099444753496396155", "0.0025780991475489869676813"},
      {3, 4, "0.0053790452810071493354663", "-0.0004578919913424486140616"},
      {3, 5, "0.0032308011441634551812315", "-0.0014908072125213319989936"},
      {3, 6, "0.0017674846795167938450865", "-0.0015900953082259670812147"},
      {3, 7, "0.0008825074832995147577407", "-0.0013496431705418864940445"},
      {3, 8, "0.0003872374479338897353530", "-0.0010417218132785702486827"},
      {4, 4, "0.0024472803344989672143380", "0.0018131048670266608466124"},
      {4, 5, "0.0018067919115537410157224", "0.0004312822675128498086469"},
      {4, 6, "0.0011430051029650516946321", "-0.0001368354074002352164914"},
      {4, 7, "0.0006599851739729340692718", "-0.0003012860412794823958833"},
      {4, 8, "0.0003564954008069045751359", "-0.0002990689541546756726797"},
      {5, 5, "0.0007164409787822497618537", "0.0008918125440361658853376"},
      {5, 6, "0.0005826627556204031506092", "0.0003133177357343641402474"},
      {5, 7, "0.0003859348621737006202841", "0.0000540098043633385948340"},
      {5, 8, "0.0002304000284892623408819", "-0.0000404135204291844446708"},
      {6, 6, "0.0001957467237331888336746", "0.0003882044128618852155461"},
      {6, 7, "0.0001826715069173610144948", "0.0001565025492374147392079"},
      {6, 8, "0.0001272475588547481432200", "0.0000473426202252359704144"},
  };
  return t;
}

const std::vector<V1sRow>& tab_v1s() {
  static const std::vector<V1sRow> t = {
      {1, "0.057624902988631887643485542240", "-0.046690829551739977074516092264"},
      {2, "0.029913203983934978439301792236", "-0.050400599397438879223041567776"},
      {3, "0.010937363639874260291206201403", "-0.044723677797644192936988882199"},
      {4, "-0.000250069139610211209861368961", "-0.036181141258573216997609321919"},
      {5, "-0.006024230915536561502482189260", "-0.027931519676734642467423612590"},
      {6, "-0.008508918812024751462009533761", "-0.021096986691682143229642825070"},
  };
  return t;
}

const std::vector<ContourRow>& tab_contour() {
  static const std::vector<ContourRow> t = {
      {64000, 20, "0.1", "0.07077602653194263984", "-0.68400205509417633076"},
      {64000, 20, "0.2", "0.07077603931143220832", "-0.68400038944591701234"},
      {64000, 20, "0.3", "0.07077603931156096762", "-0.68400038943797230450"},
      {128000, 20, "0.3", "0.07077603931153081310", "-0.68400038943793467559"},
      {256000, 20, "0.3", "0.07077603931152892845", "-0.68400038943793232378"},
      {64000, 40, "0.1", "0.07077603931142945824", "-0.68400038944426949930"},
      {128000, 40, "0.1", "0.07077603931149682353", "-0.68400038944357500783"},
      {64000, 40, "0.2", "0.07077603931176127606", "-0.68400038943868543692"},
      {128000, 40, "0.2", "0.07077603931154333296", "-0.68400038943797921085"},
      {64000, 80, "0.1", "0.07077603931041311002", "-0.68400038945008174688"},
      {128000, 80, "0.1", "0.07077603931145906913", "-0.68400038943869147372"},
      {256000, 80, "0.1", "0.07077603931152444508", "-0.68400038943797958811"},
      {64000, 80, "0.2", "0.07077603931534354347", "-0.68400038945029316088"},
      {128000, 80, "0.2", "0.07077603931176721758", "-0.68400038943870468984"},
      {256000, 80, "0.2", "0.07077603931154370430", "-0.68400038943798041416"},
      {512000, 80, "0.2", "0.07077603931152973483", "-0.68400038943793514699"},
      {1024000, 80, "0.2", "0.07077603931152886174", "-0.68400038943793231779"},
      {128000, 160, "0.1", "0.07077603931039901029", "-0.68400038945023529554"},
      {256000, 160, "0.1", "0.07077603931145818783", "-0.68400038943870107039"},
      {128000, 160, "0.15", "0.07077603931285988807", "-0.68400038945052460466"},
      {256000, 160, "0.15", "0.07077603931161199070", "-0.68400038943871915335"},
      {512000, 160, "0.15", "0.07077603931153400264", "-0.68400038943798131810"},
  };
  return t;
}

const char* mi_summary_re() { return "0.0707760393115288035395"; }
const char* mi_summary_im() { return "-0.68400038943793212918"; }
const char* mi_abs_10() { return "0.6876523689"; }
const char* im_v22_30() { return "-0.00240604184022261982751961704408"; }
const char* sin_log_0inf_25() { return "-2.704825746060380848849568"; }
const char* sin_log_01_13() { return "-2.6581349165086"; }

}  // namespace oscint::paper
